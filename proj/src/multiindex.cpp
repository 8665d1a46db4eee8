#include "nashtoric/multiindex.hpp"

#include <algorithm>

namespace nashtoric {

bool leq(const MultiIndex& gamma, const MultiIndex& beta) {
    if (gamma.size() != beta.size())
        throw std::invalid_argument("leq: length mismatch");
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] > beta[i]) return false;
    return true;
}

BigInt binom_product(const MultiIndex& beta, const MultiIndex& gamma) {
    if (beta.size() != gamma.size())
        throw std::invalid_argument("binom_product: length mismatch");
    BigInt r = 1;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        r *= binom(beta[i], gamma[i]);
        if (r == 0) break;
    }
    return r;
}

namespace {

// All tuples of length t with the given degree, lex ascending.
void emit_degree(unsigned t, unsigned deg, std::vector<unsigned>& acc,
                 std::vector<MultiIndex>& out) {
    if (acc.size() + 1 == t) {
        acc.push_back(deg);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (unsigned v = 0; v <= deg; ++v) {
        acc.push_back(v);
        emit_degree(t, deg - v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

LambdaSet enumerate_lambda(unsigned t, unsigned n) {
    if (t == 0 || n == 0)
        throw std::invalid_argument("enumerate_lambda: t and n must be positive");
    LambdaSet L{t, n, {}};
    std::vector<unsigned> acc;
    for (unsigned deg = 1; deg <= n; ++deg) emit_degree(t, deg, acc, L.elements);
    return L;
}

unsigned long lambda_count(unsigned t, unsigned n) {
    BigInt c = binom(n + t, n) - 1;
    return c.get_ui();
}

std::vector<BigInt> bar_lift(const LatticePoint& v, unsigned n) {
    if (v.x < 0 || v.y < 0)
        throw std::invalid_argument("bar_lift: point must have nonnegative coordinates");
    const LambdaSet L = enumerate_lambda(2, n);
    std::vector<BigInt> out;
    out.reserve(L.size());
    for (const MultiIndex& a : L.elements)
        out.push_back(binom(static_cast<unsigned long>(v.x), a[0]) *
                      binom(static_cast<unsigned long>(v.y), a[1]));
    return out;
}

LatticePoint apply_An(unsigned n, const MultiIndex& beta) {
    if (beta.size() != 3)
        throw std::invalid_argument("apply_An: beta must have length 3");
    const long long b1 = beta[0], b2 = beta[1], b3 = beta[2];
    return {b1 + b2 + static_cast<long long>(n) * b3,
            b2 + (static_cast<long long>(n) + 1) * b3};
}

LatticePoint m_of(unsigned n, const std::vector<MultiIndex>& J) {
    if (J.empty()) throw std::invalid_argument("m_of: empty index set");
    LatticePoint m{0, 0};
    for (const MultiIndex& b : J) m = m + apply_An(n, b);
    return m;
}

}  // namespace nashtoric
