#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nashtoric/bigint.hpp"

namespace nashtoric {

/// A point of Z^2: monomial exponents, fan rays and directions (k,1-k).
struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

inline long long cross(const LatticePoint& a, const LatticePoint& b) {
    return a.x * b.y - a.y * b.x;
}

inline long long dot(const LatticePoint& a, const LatticePoint& b) {
    return a.x * b.x + a.y * b.y;
}

/// An element of N^t with t fixed at construction (t = 2 or 3 in practice).
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> coords) : c_(std::move(coords)) {}
    MultiIndex(unsigned a, unsigned b) : c_{a, b} {}
    MultiIndex(unsigned a, unsigned b, unsigned c) : c_{a, b, c} {}

    std::size_t size() const { return c_.size(); }
    unsigned operator[](std::size_t i) const { return c_[i]; }
    unsigned degree() const {
        unsigned s = 0;
        for (unsigned v : c_) s += v;
        return s;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    /// Canonical order: graded, then lexicographic on the tuple.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c_ < b.c_;
    }

  private:
    std::vector<unsigned> c_;
};

/// Componentwise partial order gamma <= beta.
bool leq(const MultiIndex& gamma, const MultiIndex& beta);

/// Product of coordinatewise binomial coefficients C(beta_i, gamma_i).
BigInt binom_product(const MultiIndex& beta, const MultiIndex& gamma);

/// All beta in N^t with 1 <= |beta| <= n, graded-lex ordered.
struct LambdaSet {
    unsigned t = 0;
    unsigned n = 0;
    std::vector<MultiIndex> elements;

    std::size_t size() const { return elements.size(); }
};

LambdaSet enumerate_lambda(unsigned t, unsigned n);

/// Cardinality of Lambda_{t,n}: C(n+t,n) - 1.
unsigned long lambda_count(unsigned t, unsigned n);

/// The vector (C(v,alpha))_{alpha in Lambda_{2,n}}, indexed in graded-lex order.
std::vector<BigInt> bar_lift(const LatticePoint& v, unsigned n);

/// The matrix with columns (1,0), (1,1), (n,n+1) applied to beta in N^3.
LatticePoint apply_An(unsigned n, const MultiIndex& beta);

/// Sum of apply_An over a nonempty index set.
LatticePoint m_of(unsigned n, const std::vector<MultiIndex>& J);

}  // namespace nashtoric
