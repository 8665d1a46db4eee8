#include "nashtoric/eta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nashtoric {

std::string format_eta(const EtaSequence& eta) {
    std::ostringstream os;
    os << '(' << eta.z;
    for (unsigned v : eta.d) os << ',' << v;
    os << ')';
    return os.str();
}

namespace {

void compositions(unsigned n, std::vector<unsigned>& acc,
                  std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (unsigned first = 1; first <= n; ++first) {
        acc.push_back(first);
        compositions(n - first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<EtaSequence> enumerate_omega(unsigned n) {
    if (n == 0) throw std::invalid_argument("enumerate_omega: n must be positive");
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> acc;
    compositions(n, acc, parts);
    std::vector<EtaSequence> out;
    out.reserve(2 * parts.size());
    for (int z = 0; z <= 1; ++z)
        for (const auto& p : parts) {
            EtaSequence eta;
            eta.z = z;
            eta.d.push_back(0);
            eta.d.insert(eta.d.end(), p.begin(), p.end());
            out.push_back(std::move(eta));
        }
    return out;
}

void validate_eta(unsigned n, const EtaSequence& eta) {
    if (eta.z != 0 && eta.z != 1)
        throw std::invalid_argument("eta: z must be 0 or 1");
    if (eta.d.empty() || eta.d[0] != 0)
        throw std::invalid_argument("eta: d0 must be 0");
    for (std::size_t i = 1; i < eta.d.size(); ++i)
        if (eta.d[i] == 0)
            throw std::invalid_argument("eta: parts d1..dr must be positive");
    if (eta.total() != n)
        throw std::invalid_argument("eta: parts must sum to n");
}

std::vector<LatticePoint> base_vectors(unsigned n, const EtaSequence& eta) {
    validate_eta(n, eta);
    std::vector<LatticePoint> v;
    v.reserve(n);
    for (unsigned j = 1; j <= n; ++j) {
        // Block t with sum(d_0..d_{t-1}) < j <= sum(d_0..d_t), offset c.
        unsigned t = 0, before = 0;
        {
            unsigned run = 0;
            for (unsigned i = 1; i < eta.d.size(); ++i) {
                if (j <= run + eta.d[i]) {
                    t = i;
                    before = run;
                    break;
                }
                run += eta.d[i];
            }
        }
        const unsigned c = j - before;
        unsigned odd_sum = 0, even_sum = 0;
        for (unsigned i = 0; i < t; ++i)
            (i % 2 == 1 ? odd_sum : even_sum) += eta.d[i];
        const bool t_odd = (t % 2 == 1);
        long long l;
        bool on_x_axis;
        if (eta.z == 1) {
            on_x_axis = t_odd;
            l = (t_odd ? odd_sum : even_sum) + c;
        } else {
            on_x_axis = !t_odd;
            l = (t_odd ? odd_sum : even_sum) + c;
        }
        v.push_back(on_x_axis ? LatticePoint{l, 0} : LatticePoint{0, l});
    }
    return v;
}

StaircaseData staircase(unsigned n, const EtaSequence& eta) {
    StaircaseData s;
    s.eta = eta;
    s.base_vectors = base_vectors(n, eta);
    s.segments.resize(n + 1);
    for (unsigned q = 1; q <= n; ++q)
        s.segments[0].push_back({q, q});
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned p = 0; p <= n - j; ++p)
            s.segments[j].push_back(s.base_vectors[j - 1] +
                                    LatticePoint{p, p});
    return s;
}

std::vector<LatticePoint> StaircaseData::all_points() const {
    std::vector<LatticePoint> out;
    for (const auto& seg : segments) out.insert(out.end(), seg.begin(), seg.end());
    return out;
}

TranslatedStaircase translated_staircase(unsigned n, const EtaSequence& eta) {
    const StaircaseData s = staircase(n, eta);
    TranslatedStaircase t;
    t.eta = eta;
    t.segments.resize(n + 1);
    t.segments[0] = s.segments[0];
    for (unsigned i = 1; i <= n; ++i) {
        const unsigned long shift =
            static_cast<unsigned long>(n) *
            static_cast<unsigned long>(s.base_vectors[i - 1].y);
        t.shifts.push_back(shift);
        for (const LatticePoint& v : s.segments[i])
            t.segments[i].push_back(v + LatticePoint{static_cast<long long>(shift),
                                                     static_cast<long long>(shift)});
    }
    for (const auto& seg : t.segments)
        t.points.insert(t.points.end(), seg.begin(), seg.end());
    return t;
}

bool check_staircase_properties(unsigned n, const EtaSequence& eta) {
    const StaircaseData sd = staircase(n, eta);
    const std::vector<LatticePoint> pts = sd.all_points();

    // 1) bar lifts separate points: the entries at (1,0) and (0,1) recover
    // the coordinates, and all lifted rows are pairwise distinct.
    const LambdaSet lam = enumerate_lambda(2, n);
    std::size_t ix = 0, iy = 0;
    for (std::size_t i = 0; i < lam.elements.size(); ++i) {
        if (lam.elements[i] == MultiIndex(1u, 0u)) ix = i;
        if (lam.elements[i] == MultiIndex(0u, 1u)) iy = i;
    }
    std::vector<std::vector<BigInt>> rows;
    for (const LatticePoint& p : pts) {
        rows.push_back(bar_lift(p, n));
        if (rows.back()[ix] != static_cast<long>(p.x) ||
            rows.back()[iy] != static_cast<long>(p.y))
            return false;
    }
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) return false;

    // 2) |T_eta| = lambda_{2,n}
    if (pts.size() != lambda_count(2, n)) return false;

    const std::vector<LatticePoint>& v = sd.base_vectors;
    for (unsigned j = 1; j <= n; ++j) {
        // 3) the axis coordinate of v_j never exceeds j
        if (std::max(v[j - 1].x, v[j - 1].y) > static_cast<long long>(j))
            return false;
        // 5) every shorter vector on the same axis appears earlier
        const bool on_x = v[j - 1].y == 0;
        const long long p = on_x ? v[j - 1].x : v[j - 1].y;
        for (long long q = 1; q < p; ++q) {
            const LatticePoint want = on_x ? LatticePoint{q, 0} : LatticePoint{0, q};
            if (std::find(v.begin(), v.begin() + (j - 1), want) ==
                v.begin() + (j - 1))
                return false;
        }
        // 6) the first j vectors are initial segments of both axes
        std::vector<LatticePoint> prefix(v.begin(), v.begin() + j);
        std::sort(prefix.begin(), prefix.end());
        std::vector<LatticePoint> expect;
        const long long la = on_x ? static_cast<long long>(j) - p : p;
        for (long long t = 1; t <= la; ++t) expect.push_back({0, t});
        for (long long s = 1; s <= static_cast<long long>(j) - la; ++s)
            expect.push_back({s, 0});
        std::sort(expect.begin(), expect.end());
        if (prefix != expect) return false;
    }

    // 4) all coordinates bounded by n
    for (const LatticePoint& p : pts)
        if (p.x > static_cast<long long>(n) || p.y > static_cast<long long>(n))
            return false;
    return true;
}

bool check_descending_diagonals(unsigned n, const EtaSequence& eta) {
    const std::vector<LatticePoint> v = base_vectors(n, eta);
    // Cumulative block boundaries of the composition.
    std::vector<unsigned> cum;
    unsigned run = 0;
    for (unsigned x : eta.d) cum.push_back(run += x);
    auto same_block = [&](unsigned l, unsigned j) {
        for (std::size_t t = 1; t < cum.size(); ++t)
            if (cum[t - 1] < l && l < j && j <= cum[t]) return true;
        return false;
    };
    for (unsigned l = 1; l < n; ++l)
        for (unsigned j = l + 1; j <= n; ++j) {
            const bool both_x = v[l - 1].y == 0 && v[j - 1].y == 0;
            const bool both_y = v[l - 1].x == 0 && v[j - 1].x == 0;
            if (!both_x && !both_y) continue;
            const long long el =
                (both_x ? v[l - 1].x : v[l - 1].y) + (n - l);
            const long long ej =
                (both_x ? v[j - 1].x : v[j - 1].y) + (n - j);
            if (ej > el) return false;
            if ((ej == el) != same_block(l, j)) return false;
        }
    return true;
}

std::vector<MultiIndex> j_of_eta(unsigned n, const EtaSequence& eta) {
    const TranslatedStaircase t = translated_staircase(n, eta);
    std::vector<MultiIndex> J;
    J.reserve(t.points.size());
    for (const LatticePoint& v : t.points) {
        MultiIndex beta;
        if (v.x == v.y) {
            beta = MultiIndex(0, static_cast<unsigned>(v.x), 0);
        } else if (v.x > v.y) {
            beta = MultiIndex(static_cast<unsigned>(v.x - v.y),
                              static_cast<unsigned>(v.y), 0);
        } else {
            const long long q = v.y - v.x;
            const long long s = v.x - static_cast<long long>(n) * q;
            if (s < 0)
                throw std::logic_error("j_of_eta: point has no preimage in Lambda");
            beta = MultiIndex(0, static_cast<unsigned>(s), static_cast<unsigned>(q));
        }
        if (beta.degree() < 1 || beta.degree() > n || apply_An(n, beta) != v)
            throw std::logic_error("j_of_eta: inverse map failed");
        J.push_back(beta);
    }
    std::sort(J.begin(), J.end());
    if (J.size() != lambda_count(2, n) ||
        std::adjacent_find(J.begin(), J.end()) != J.end())
        throw std::logic_error("j_of_eta: preimage is not a lambda-sized set");
    return J;
}

}  // namespace nashtoric
