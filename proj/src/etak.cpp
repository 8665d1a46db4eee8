#include "nashtoric/etak.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nashtoric/nashfan.hpp"

namespace nashtoric {

namespace {

long long parity_sum(const std::vector<unsigned>& d, unsigned upto, bool odd) {
    long long s = 0;
    for (unsigned j = 0; j <= upto && j < d.size(); ++j)
        if ((j % 2 == 1) == odd) s += d[j];
    return s;
}

}  // namespace

EtaKTrace build_eta_k(unsigned n, unsigned k) {
    if (n == 0 || k < 1 || k > n)
        throw std::invalid_argument("build_eta_k: need 1 <= k <= n");
    // f_k((1,0)) = k and f_k((n,n+1)) = n+1-k; both positive in range.
    const long long fx = k;
    const long long fd = static_cast<long long>(n) + 1 - k;

    EtaKTrace trace;
    trace.n = n;
    trace.k = k;
    trace.eta.z = fx <= fd ? 1 : 0;
    trace.eta.d.push_back(0);

    unsigned total = 0;
    for (unsigned l = 1; total < n; ++l) {
        const bool l_odd = (l % 2 == 1);
        // Each t_l is the largest multiple of one step value not exceeding a
        // target reached with the other; exact integer division suffices.
        const long long step = (trace.eta.z == 1) == l_odd ? fx : fd;
        const long long other = (trace.eta.z == 1) == l_odd ? fd : fx;
        // The opposite-parity partial sum: even-indexed parts when l is odd.
        const long long target_scale =
            (parity_sum(trace.eta.d, l - 1, !l_odd) + 1) * other;
        const long long t_l = target_scale / step;
        const long long s_l =
            l == 1 ? 0 : parity_sum(trace.eta.d, l - 1, l_odd);
        const long long d_l =
            std::min<long long>(static_cast<long long>(n) - total, t_l - s_l);
        if (d_l <= 0)
            throw std::logic_error("build_eta_k: nonpositive part");
        trace.t.push_back(t_l);
        trace.s.push_back(s_l);
        trace.eta.d.push_back(static_cast<unsigned>(d_l));
        total += static_cast<unsigned>(d_l);
    }
    validate_eta(n, trace.eta);
    return trace;
}

std::optional<EtaSequence> twin_eta(unsigned n, unsigned k) {
    const EtaSequence eta = build_eta_k(n, k).eta;
    if (eta.d.back() < 2) return std::nullopt;
    EtaSequence twin = eta;
    twin.d.back() -= 1;
    twin.d.push_back(1);
    return twin;
}

EtaKReport verify_main(unsigned n, unsigned k) {
    EtaKReport rep;
    rep.n = n;
    rep.k = k;
    rep.trace = build_eta_k(n, k);
    rep.eta_k = rep.trace.eta;

    const std::vector<MultiIndex> Jk = j_of_eta(n, rep.eta_k);
    rep.m_k = m_of(n, Jk);
    rep.f_value = f_k(k, rep.m_k);

    std::optional<EtaSequence> twin = twin_eta(n, k);
    rep.twin_constructive = twin.has_value();
    if (!twin.has_value()) {
        for (const EtaSequence& eta : enumerate_omega(n)) {
            if (eta == rep.eta_k) continue;
            if (f_k(k, m_of(n, j_of_eta(n, eta))) == rep.f_value) {
                twin = eta;
                break;
            }
        }
        if (!twin.has_value())
            throw std::logic_error("verify_main: no twin in omega");
    }
    rep.twin = *twin;

    const std::vector<MultiIndex> Jt = j_of_eta(n, rep.twin);
    rep.m_twin = m_of(n, Jt);
    rep.twin_f_equal = f_k(k, rep.m_twin) == rep.f_value;
    rep.m_distinct = !(rep.m_k == rep.m_twin);
    rep.eta_k_in_S = is_in_S(n, Jk);
    rep.twin_in_S = is_in_S(n, Jt);

    rep.family_min = true;
    for (const EtaSequence& eta : enumerate_omega(n))
        if (f_k(k, m_of(n, j_of_eta(n, eta))) < rep.f_value) {
            rep.family_min = false;
            break;
        }
    return rep;
}

bool check_final_element(unsigned n, unsigned k) {
    const EtaKTrace trace = build_eta_k(n, k);
    const LatticePoint last = base_vectors(n, trace.eta).back();
    return last == LatticePoint{0, static_cast<long long>(k)} ||
           last == LatticePoint{static_cast<long long>(n) - k + 1, 0};
}

bool check_bound_lemmas(unsigned n, unsigned k,
                        const std::vector<MultiIndex>& sample) {
    const EtaSequence eta_k = build_eta_k(n, k).eta;
    const TranslatedStaircase tp = translated_staircase(n, eta_k);
    const StaircaseData st = staircase(n, eta_k);

    // Monotonicity of f_k under the componentwise order.
    for (const MultiIndex& b : sample)
        for (const MultiIndex& bp : sample)
            if (leq(bp, b) &&
                f_k(k, apply_An(n, bp)) > f_k(k, apply_An(n, b)))
                return false;

    // Indices whose image avoids every diagonal through the translated
    // staircase dominate the whole staircase.
    auto on_some_diagonal = [&](const LatticePoint& p) {
        for (const LatticePoint& v : tp.points)
            if (p.x - v.x == p.y - v.y && p.x >= v.x) return true;
        return false;
    };
    for (const MultiIndex& b : sample) {
        const LatticePoint p = apply_An(n, b);
        if (on_some_diagonal(p)) continue;
        for (const LatticePoint& v : tp.points)
            if (f_k(k, p) < f_k(k, v)) return false;
    }

    // Far diagonal points past segment l dominate the first l segments.
    for (unsigned l = 1; l <= n; ++l) {
        const unsigned long r_l = tp.shifts[l - 1];
        const long long q_min =
            static_cast<long long>(n) - l + 1 + static_cast<long long>(r_l);
        for (long long q = q_min; q <= q_min + 2 * static_cast<long long>(n); ++q) {
            const LatticePoint v = st.base_vectors[l - 1] + LatticePoint{q, q};
            for (unsigned j = 0; j <= l; ++j)
                for (const LatticePoint& u : tp.segments[j])
                    if (f_k(k, v) < f_k(k, u)) return false;
        }
    }
    return true;
}

bool check_propetak(unsigned n, unsigned k) {
    const EtaKTrace trace = build_eta_k(n, k);
    const EtaSequence& eta = trace.eta;
    const std::vector<LatticePoint> v = base_vectors(n, eta);
    std::vector<long long> shift(n), fval(n);
    for (unsigned i = 1; i <= n; ++i) {
        shift[i - 1] = static_cast<long long>(n) * v[i - 1].y;
        fval[i - 1] = f_k(k, v[i - 1] + LatticePoint{shift[i - 1], shift[i - 1]});
    }
    const long long fx = k;
    const long long fd = static_cast<long long>(n) + 1 - k;

    // (2): each block is bounded by the step target that defined t_l.
    unsigned run = 0;
    for (unsigned l = 1; l < eta.d.size(); ++l) {
        const bool l_odd = (l % 2 == 1);
        const long long bound = (parity_sum(eta.d, l, !l_odd) + 1) *
                                ((eta.z == 1) == l_odd ? fd : fx);
        for (unsigned i = run + 1; i <= run + eta.d[l]; ++i)
            if (fval[i - 1] > bound) return false;
        run += eta.d[l];
    }

    // (3) within blocks and (4) globally: the shifted values are sorted.
    for (unsigned i = 1; i < n; ++i)
        if (fval[i - 1] > fval[i]) return false;

    // (5): an equality between neighbours forces a gap of 2 two steps back.
    for (unsigned l = 3; l <= n; ++l)
        if (fval[l - 1] == fval[l - 2] && fval[l - 1] < fval[l - 3] + 2)
            return false;
    return true;
}

}  // namespace nashtoric
