#include "nashtoric/nashfan.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nashtoric {

LatticePoint primitive(const LatticePoint& v) {
    const long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    return {v.x / g, v.y / g};
}

void PointCloud::add(const LatticePoint& p, const std::string& witness) {
    auto it = std::lower_bound(points.begin(), points.end(), p,
                               [](const Entry& e, const LatticePoint& q) {
                                   return e.p < q;
                               });
    if (it == points.end() || !(it->p == p)) it = points.insert(it, Entry{p, {}, 0});
    if (!witness.empty()) it->witnesses.push_back(witness);
    ++it->witness_count;
}

std::vector<LatticePoint> PointCloud::coordinates() const {
    std::vector<LatticePoint> out;
    out.reserve(points.size());
    for (const Entry& e : points) out.push_back(e.p);
    return out;
}

bool Fan2D::has_ray(const LatticePoint& r) const {
    return std::find(rays.begin(), rays.end(), r) != rays.end();
}

std::vector<BigInt> c_vector(unsigned n, const MultiIndex& beta) {
    if (beta.size() != 3 || beta.degree() < 1 || beta.degree() > n)
        throw std::invalid_argument("c_vector: beta not in Lambda_{3,n}");
    const std::size_t len = lambda_count(2, n);
    std::vector<BigInt> acc(len, 0);
    for (unsigned g1 = 0; g1 <= beta[0]; ++g1)
        for (unsigned g2 = 0; g2 <= beta[1]; ++g2)
            for (unsigned g3 = 0; g3 <= beta[2]; ++g3) {
                const MultiIndex gamma(g1, g2, g3);
                if (gamma.degree() == 0) continue;  // bar of (0,0) is zero
                const unsigned diff = beta.degree() - gamma.degree();
                BigInt coeff = binom_product(beta, gamma);
                if (diff % 2 == 1) coeff = -coeff;
                const std::vector<BigInt> lifted = bar_lift(apply_An(n, gamma), n);
                for (std::size_t i = 0; i < len; ++i) acc[i] += coeff * lifted[i];
            }
    return acc;
}

BigIntMatrix l_matrix(unsigned n, std::vector<MultiIndex> J) {
    if (J.size() != lambda_count(2, n))
        throw std::invalid_argument("l_matrix: |J| must equal lambda_{2,n}");
    std::sort(J.begin(), J.end());
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(J.size());
    for (const MultiIndex& b : J) rows.push_back(c_vector(n, b));
    return BigIntMatrix::from_rows(rows);
}

bool is_in_S(unsigned n, std::vector<MultiIndex> J, bool filter) {
    return determinant_nonzero(l_matrix(n, std::move(J)), filter);
}

long long ord_value(const PointCloud& points, const LatticePoint& v,
                    std::vector<LatticePoint>* minimizers) {
    if (points.points.empty())
        throw std::invalid_argument("ord_value: empty point cloud");
    long long best = std::numeric_limits<long long>::max();
    for (const auto& e : points.points) best = std::min(best, dot(v, e.p));
    if (minimizers != nullptr) {
        minimizers->clear();
        for (const auto& e : points.points)
            if (dot(v, e.p) == best) minimizers->push_back(e.p);
    }
    return best;
}

namespace {

const PointCloud::Entry& entry_of(const PointCloud& cloud, const LatticePoint& p) {
    for (const auto& e : cloud.points)
        if (e.p == p) return e;
    throw std::logic_error("entry_of: point not in cloud");
}

}  // namespace

Fan2D newton_fan(const PointCloud& points) {
    if (points.points.empty())
        throw std::invalid_argument("newton_fan: empty point cloud");
    const SigmaCone sigma{points.n};
    const std::vector<LatticePoint> pts = points.coordinates();

    // Vertex chain of conv(points) + dual cone, walked as the support
    // direction rotates from (0,1) to (n+1,-n). Start: min y, then min x.
    LatticePoint cur = pts[0];
    for (const LatticePoint& p : pts)
        if (p.y < cur.y || (p.y == cur.y && p.x < cur.x)) cur = p;

    std::vector<LatticePoint> chain{cur};
    // Bounded edges must stay strictly counterclockwise of the recession
    // direction (n, n+1); anything else belongs to the end face.
    const LatticePoint recession = sigma.dual_end();
    LatticePoint prev_edge{1, 0};  // incoming unbounded edge runs along -x
    for (;;) {
        bool found = false;
        LatticePoint best{0, 0};
        for (const LatticePoint& q : pts) {
            if (q == cur) continue;
            const LatticePoint d = q - cur;
            // Skip the straight-back direction along the previous edge.
            if (cross(prev_edge, d) == 0 && dot(prev_edge, d) < 0) continue;
            if (!found || cross(best, d) > 0 ||
                (cross(d, best) == 0 && dot(d, d) > dot(best, best))) {
                best = d;
                found = true;
            }
        }
        if (!found || cross(recession, best) <= 0) break;
        cur = cur + best;
        chain.push_back(cur);
        prev_edge = best;
    }

    Fan2D fan;
    fan.n = points.n;
    fan.rays.push_back(sigma.ray_start());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const LatticePoint e = chain[i + 1] - chain[i];
        const LatticePoint normal = primitive({e.y, -e.x});
        if (normal == sigma.ray_start()) continue;  // edge on the boundary face
        fan.rays.push_back(normal);
    }
    fan.rays.push_back(sigma.ray_end());

    // One cone per chain vertex; boundary-face edges collapse onto the
    // first vertex's cone, so walk chain vertices against ray gaps.
    std::size_t v = 0;
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i) {
        Fan2D::Cone cone;
        cone.ray_lo = i;
        cone.ray_hi = i + 1;
        const auto& e = entry_of(points, chain[v]);
        cone.tag = e.p;
        cone.witnesses = e.witnesses;
        fan.cones.push_back(std::move(cone));
        if (v + 1 < chain.size()) ++v;
    }
    return fan;
}

PointCloud family_points(unsigned n) {
    PointCloud cloud;
    cloud.n = n;
    for (const EtaSequence& eta : enumerate_omega(n)) {
        const std::vector<MultiIndex> J = j_of_eta(n, eta);
        cloud.add(m_of(n, J), format_eta(eta));
    }
    return cloud;
}

Fan2D minimal_resolution_fan(unsigned n) {
    if (n == 0) throw std::invalid_argument("minimal_resolution_fan: n must be positive");
    Fan2D fan;
    fan.n = n;
    fan.rays.push_back({0, 1});
    for (unsigned k = 1; k <= n; ++k)
        fan.rays.push_back({static_cast<long long>(k),
                            1 - static_cast<long long>(k)});
    fan.rays.push_back({static_cast<long long>(n) + 1,
                        -static_cast<long long>(n)});
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
        fan.cones.push_back({i, i + 1, std::nullopt, {}});
    return fan;
}

bool ray_present(const PointCloud& points, unsigned k,
                 std::pair<LatticePoint, LatticePoint>* witness) {
    if (k < 1 || k > points.n)
        throw std::invalid_argument("ray_present: k out of range");
    std::vector<LatticePoint> mins;
    ord_value(points, {static_cast<long long>(k), 1 - static_cast<long long>(k)},
              &mins);
    if (mins.size() < 2) return false;
    if (witness != nullptr) *witness = {mins.front(), mins.back()};
    return true;
}

namespace {

// v lies in the closed cone [a, b], rays in clockwise order.
bool in_cone(const LatticePoint& a, const LatticePoint& b, const LatticePoint& v) {
    return cross(a, v) <= 0 && cross(v, b) <= 0;
}

}  // namespace

bool refines(const Fan2D& fine, const Fan2D& coarse) {
    if (fine.n != coarse.n)
        throw std::invalid_argument("refines: fans belong to different cones");
    for (const LatticePoint& r : coarse.rays)
        if (!fine.has_ray(r)) return false;
    for (const auto& fc : fine.cones) {
        bool inside = false;
        for (const auto& cc : coarse.cones)
            if (in_cone(coarse.rays[cc.ray_lo], coarse.rays[cc.ray_hi],
                        fine.rays[fc.ray_lo]) &&
                in_cone(coarse.rays[cc.ray_lo], coarse.rays[cc.ray_hi],
                        fine.rays[fc.ray_hi])) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace nashtoric
