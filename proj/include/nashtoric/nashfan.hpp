#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashtoric/eta.hpp"
#include "nashtoric/exactlinalg.hpp"
#include "nashtoric/multiindex.hpp"

namespace nashtoric {

/// The cone R+{(0,1), (n+1,-n)} defining the A_n surface.
struct SigmaCone {
    unsigned n = 0;

    LatticePoint ray_start() const { return {0, 1}; }
    LatticePoint ray_end() const {
        return {static_cast<long long>(n) + 1, -static_cast<long long>(n)};
    }
    // Generators of the dual cone, forced by the two ray inequalities.
    LatticePoint dual_start() const { return {1, 0}; }
    LatticePoint dual_end() const {
        return {static_cast<long long>(n), static_cast<long long>(n) + 1};
    }

    bool contains(const LatticePoint& v) const {
        return cross(ray_start(), v) <= 0 && cross(v, ray_end()) <= 0;
    }
};

/// Deduplicated monomial exponents m_J with witness bookkeeping.
struct PointCloud {
    struct Entry {
        LatticePoint p;
        std::vector<std::string> witnesses;  // eta labels when known
        unsigned long long witness_count = 0;
    };

    unsigned n = 0;
    std::vector<Entry> points;  // sorted by (x, y)

    void add(const LatticePoint& p, const std::string& witness = {});
    std::vector<LatticePoint> coordinates() const;
};

/// A complete subdivision of sigma_n: primitive rays in rotational order from
/// (0,1) to (n+1,-n); each cone spans adjacent rays and may carry the
/// minimizing exponent it belongs to.
struct Fan2D {
    struct Cone {
        std::size_t ray_lo = 0;
        std::size_t ray_hi = 0;
        std::optional<LatticePoint> tag;
        std::vector<std::string> witnesses;
    };

    unsigned n = 0;
    std::vector<LatticePoint> rays;
    std::vector<Cone> cones;

    bool has_ray(const LatticePoint& r) const;
};

/// The inclusion-exclusion combination of lifted images of points below beta.
std::vector<BigInt> c_vector(unsigned n, const MultiIndex& beta);

/// Square matrix with rows c_vector(beta) for beta in J (graded-lex order).
BigIntMatrix l_matrix(unsigned n, std::vector<MultiIndex> J);

/// Membership of J in the nonvanishing-minor family S_{A_n}.
bool is_in_S(unsigned n, std::vector<MultiIndex> J, bool filter = false);

/// Exact min over the cloud of <v, m>; optionally reports all minimizers.
long long ord_value(const PointCloud& points, const LatticePoint& v,
                    std::vector<LatticePoint>* minimizers = nullptr);

/// Normal fan of conv(points) + dual cone, restricted to sigma_n.
Fan2D newton_fan(const PointCloud& points);

/// m_{J_eta} over all eta, deduplicated with eta witnesses.
PointCloud family_points(unsigned n);

/// Rays (0,1), (1,0), (2,-1), ..., (n,1-n), (n+1,-n).
Fan2D minimal_resolution_fan(unsigned n);

/// True iff (k,1-k) has at least two distinct minimizing points; the two
/// witnesses are reported through *witness when non-null.
bool ray_present(const PointCloud& points, unsigned k,
                 std::pair<LatticePoint, LatticePoint>* witness = nullptr);

/// Combinatorial refinement test: coarse rays all appear in fine, and every
/// fine cone lies inside a coarse cone.
bool refines(const Fan2D& fine, const Fan2D& coarse);

/// Divide out the gcd of the coordinates.
LatticePoint primitive(const LatticePoint& v);

}  // namespace nashtoric
