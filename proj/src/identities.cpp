#include "nashtoric/identities.hpp"

#include <stdexcept>

#include "nashtoric/exactlinalg.hpp"

namespace nashtoric {

bool check_riordan(unsigned n, unsigned m, unsigned p) {
    const long long ni = n, mi = m, pi = p;

    // 1) C(n,m) C(m,p) == C(n,p) C(n-p, m-p)
    if (binom(n, m) * binom(m, p) != binom(n, p) * binom_int(ni - pi, mi - pi))
        return false;

    // 2) sum_j (-1)^j C(n-j, m) C(p, j) == C(n-p, m-p), with binomials read as
    // polynomials in the top argument so the identity holds for all naturals.
    BigInt s2 = 0;
    for (long long j = 0; j <= pi; ++j) {
        BigInt term = binom_int(ni - j, mi) * binom(p, static_cast<unsigned>(j));
        if (j % 2 == 0)
            s2 += term;
        else
            s2 -= term;
    }
    if (s2 != binom_int(ni - pi, mi - pi)) return false;
    // The symmetric form C(n-p, n-m) requires a natural top argument.
    if (ni >= pi && s2 != binom_int(ni - pi, ni - mi)) return false;

    // 3) sum_j C(n, m-j) C(p, j) == C(n+p, m)
    BigInt s3 = 0;
    for (long long j = 0; j <= pi; ++j)
        s3 += binom_int(ni, mi - j) * binom(p, static_cast<unsigned>(j));
    if (s3 != binom(n + p, m)) return false;

    // 4) sum_j C(n-p, m-j) C(p, j) == C(n, m)
    BigInt s4 = 0;
    for (long long j = 0; j <= pi; ++j)
        s4 += binom_int(ni - pi, mi - j) * binom(p, static_cast<unsigned>(j));
    return s4 == binom(n, m);
}

bool check_vandermonde_matrix(const std::vector<long long>& c) {
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    if (c.front() <= 0)
        throw std::invalid_argument("coefficients must be positive");
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] <= c[i - 1])
            throw std::invalid_argument("coefficients must strictly increase");

    const std::size_t d = c.size();
    std::vector<BigInt> entries;
    entries.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            entries.push_back(binom_int(c[i], static_cast<long long>(j)));
    return determinant(BigIntMatrix(d, d, std::move(entries))) != 0;
}

bool check_diagonal_span(unsigned n, unsigned m) {
    const std::size_t dim = lambda_count(2, n);

    // v_j = sum_{i=1}^{j} (-1)^{j-i} C(j,i) bar(i,i)
    std::vector<std::vector<BigInt>> v(n + 1);
    std::vector<std::vector<BigInt>> bars(n + 1);
    for (unsigned i = 1; i <= n; ++i)
        bars[i] = bar_lift({static_cast<long long>(i), static_cast<long long>(i)}, n);
    for (unsigned j = 1; j <= n; ++j) {
        v[j].assign(dim, 0);
        for (unsigned i = 1; i <= j; ++i) {
            BigInt coef = binom(j, i);
            if ((j - i) % 2 == 1) coef = -coef;
            for (std::size_t a = 0; a < dim; ++a) v[j][a] += coef * bars[i][a];
        }
    }

    std::vector<BigInt> rhs(dim, 0);
    for (unsigned j = 1; j <= n; ++j) {
        const BigInt coef = binom(m, j);
        for (std::size_t a = 0; a < dim; ++a) rhs[a] += coef * v[j][a];
    }
    return rhs == bar_lift({static_cast<long long>(m), static_cast<long long>(m)}, n);
}

bool check_vanishing_sum(unsigned n, unsigned a, unsigned r, unsigned l,
                         bool transposed) {
    if (l < 1 || l > n) throw std::invalid_argument("l must satisfy 1 <= l <= n");

    const std::size_t dim = lambda_count(2, n);
    std::vector<BigInt> acc(dim, 0);
    const unsigned jmax = n - l + 1;
    for (unsigned i = 0; i <= l; ++i) {
        for (unsigned j = 0; j <= jmax; ++j) {
            BigInt coef = binom(l, i) * binom(jmax, j);
            if ((i + jmax + j) % 2 == 1) coef = -coef;
            LatticePoint pt{static_cast<long long>(a + r + j),
                            static_cast<long long>(r + i + j)};
            if (transposed) std::swap(pt.x, pt.y);
            const std::vector<BigInt> bar = bar_lift(pt, n);
            for (std::size_t q = 0; q < dim; ++q) acc[q] += coef * bar[q];
        }
    }
    for (const BigInt& e : acc)
        if (e != 0) return false;
    return true;
}

bool check_translation_span(unsigned n, const EtaSequence& eta, unsigned l,
                            const std::vector<long long>& shifts) {
    validate_eta(n, eta);
    if (l < 1 || l > n) throw std::invalid_argument("l must satisfy 1 <= l <= n");
    if (shifts.size() != l)
        throw std::invalid_argument("shifts must have length l");
    for (long long s : shifts)
        if (s < 0) throw std::invalid_argument("shifts must be non-negative");

    const StaircaseData sd = staircase(n, eta);
    std::vector<std::vector<BigInt>> shifted, plain;
    for (const LatticePoint& p : sd.segments[0]) {
        shifted.push_back(bar_lift(p, n));
        plain.push_back(bar_lift(p, n));
    }
    for (unsigned i = 1; i <= l; ++i) {
        const long long s = shifts[i - 1];
        for (const LatticePoint& p : sd.segments[i]) {
            shifted.push_back(bar_lift(p + LatticePoint{s, s}, n));
            plain.push_back(bar_lift(p, n));
        }
    }

    const std::size_t ra = rank(BigIntMatrix::from_rows(shifted));
    const std::size_t rb = rank(BigIntMatrix::from_rows(plain));
    if (ra != rb) return false;

    std::vector<std::vector<BigInt>> both = shifted;
    both.insert(both.end(), plain.begin(), plain.end());
    return rank(BigIntMatrix::from_rows(both)) == ra;
}

}  // namespace nashtoric
