#pragma once

#include <vector>

#include "nashtoric/multiindex.hpp"

namespace nashtoric {

/// A parity bit z together with a composition d_1,...,d_r of n; d_0 = 0 is
/// stored explicitly so partial sums over d read off directly.
struct EtaSequence {
    int z = 0;
    std::vector<unsigned> d;  // d[0] == 0, d[i] >= 1 for i >= 1

    unsigned r() const { return static_cast<unsigned>(d.size()) - 1; }
    unsigned total() const {
        unsigned s = 0;
        for (unsigned v : d) s += v;
        return s;
    }

    friend bool operator==(const EtaSequence&, const EtaSequence&) = default;
    friend auto operator<=>(const EtaSequence&, const EtaSequence&) = default;
};

/// "(z,d0,d1,...,dr)" rendering used in reports.
std::string format_eta(const EtaSequence& eta);

/// All 2 * 2^(n-1) sequences: z in {0,1} then compositions of n in lex order.
std::vector<EtaSequence> enumerate_omega(unsigned n);

/// Throws unless d0 = 0, all later parts positive and the parts sum to n.
void validate_eta(unsigned n, const EtaSequence& eta);

/// The axis vectors v_{1..n} attached to eta.
std::vector<LatticePoint> base_vectors(unsigned n, const EtaSequence& eta);

/// The diagonal-segment family T_0,...,T_n and its base vectors.
struct StaircaseData {
    EtaSequence eta;
    std::vector<LatticePoint> base_vectors;           // v_1..v_n
    std::vector<std::vector<LatticePoint>> segments;  // T_0..T_n

    std::vector<LatticePoint> all_points() const;
};

StaircaseData staircase(unsigned n, const EtaSequence& eta);

/// The staircase with segment i moved n*pi_2(v_i) steps along the diagonal.
struct TranslatedStaircase {
    EtaSequence eta;
    std::vector<unsigned long> shifts;                // r_1..r_n
    std::vector<std::vector<LatticePoint>> segments;  // T_0, T_i + r_i
    std::vector<LatticePoint> points;                 // flattened, segment order
};

TranslatedStaircase translated_staircase(unsigned n, const EtaSequence& eta);

/// Structural facts about T_eta: bar lifts are injective on it, its size is
/// lambda_{2,n}, axis vectors satisfy l <= j, coordinates stay <= n, and the
/// axis-vector prefixes are the initial segments of both axes.
bool check_staircase_properties(unsigned n, const EtaSequence& eta);

/// Monotonicity of the diagonal endpoints v_j + (n-j)(1,1) along each axis,
/// with equality exactly inside a single block of the composition.
bool check_descending_diagonals(unsigned n, const EtaSequence& eta);

/// The unique subset of Lambda_{3,n} mapped onto the translated staircase by
/// apply_An, graded-lex sorted. Throws std::logic_error if the constructive
/// inverse leaves Lambda_{3,n} (an implementation bug, not a runtime state).
std::vector<MultiIndex> j_of_eta(unsigned n, const EtaSequence& eta);

}  // namespace nashtoric
