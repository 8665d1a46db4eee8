#pragma once

#include <cstdint>
#include <vector>

#include "nashtoric/bigint.hpp"

namespace nashtoric {

/// Dense matrix with arbitrary-precision integer entries, immutable once built.
class BigIntMatrix {
  public:
    BigIntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    static BigIntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    BigIntMatrix transposed() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const BigIntMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const BigIntMatrix& m);

/// True iff v is a rational linear combination of the basis vectors.
bool in_span(const std::vector<BigInt>& v,
             const std::vector<std::vector<BigInt>>& basis);

/// Determinant of an integer matrix reduced mod a prime; entries given
/// row-major. Used as a fast filter: a nonzero value proves det != 0.
std::uint64_t determinant_mod(const BigIntMatrix& m, std::uint64_t p);

/// Nonvanishing test. With filter=true a single mod-p determinant certifies
/// most nonzero cases; a zero residue falls back to the exact path, so the
/// verdict is always exact.
bool determinant_nonzero(const BigIntMatrix& m, bool filter = false);

}  // namespace nashtoric
