#pragma once

#include <optional>
#include <vector>

#include "nashtoric/eta.hpp"
#include "nashtoric/multiindex.hpp"

namespace nashtoric {

/// <(k,1-k), v> = k*x + (1-k)*y.
inline long long f_k(unsigned k, const LatticePoint& v) {
    return static_cast<long long>(k) * v.x + (1 - static_cast<long long>(k)) * v.y;
}

/// The greedy construction of the f_k-minimizing sequence, with every
/// intermediate value retained for audit.
struct EtaKTrace {
    unsigned n = 0;
    unsigned k = 0;
    EtaSequence eta;
    std::vector<long long> t;  // t_1..t_r
    std::vector<long long> s;  // s_1..s_r
};

EtaKTrace build_eta_k(unsigned n, unsigned k);

/// The sequence obtained by splitting the last part d_r into (d_r - 1, 1).
/// Empty when d_r < 2 (only n = 1), where the twin is found by search instead.
std::optional<EtaSequence> twin_eta(unsigned n, unsigned k);

/// Consolidated per-(n,k) verification: the distinguished sequence, a second
/// witness with the same f_k value, S-membership and family minimality.
struct EtaKReport {
    unsigned n = 0;
    unsigned k = 0;
    EtaKTrace trace;
    EtaSequence eta_k;
    EtaSequence twin;
    bool twin_constructive = false;  // false: found by sweeping omega
    LatticePoint m_k;
    LatticePoint m_twin;
    long long f_value = 0;
    bool twin_f_equal = false;
    bool m_distinct = false;
    bool eta_k_in_S = false;
    bool twin_in_S = false;
    bool family_min = false;

    bool all_checks_pass() const {
        return twin_f_equal && m_distinct && eta_k_in_S && twin_in_S && family_min;
    }
};

EtaKReport verify_main(unsigned n, unsigned k);

/// The last axis vector of the constructed sequence is (0,k) or (n-k+1,0).
bool check_final_element(unsigned n, unsigned k);

/// Instance checks of the three f_k bounding lemmas over a sample of indices.
bool check_bound_lemmas(unsigned n, unsigned k,
                        const std::vector<MultiIndex>& sample);

/// Items (2)-(5) of the structural lemma for the constructed sequence.
bool check_propetak(unsigned n, unsigned k);

}  // namespace nashtoric
