#include "nashtoric/exactlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace nashtoric {

BigIntMatrix::BigIntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("BigIntMatrix: entry count mismatch");
}

BigIntMatrix BigIntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    std::vector<BigInt> a;
    a.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("BigIntMatrix::from_rows: ragged rows");
        for (const BigInt& v : row) a.push_back(v);
    }
    return BigIntMatrix(r, c, std::move(a));
}

BigIntMatrix BigIntMatrix::transposed() const {
    std::vector<BigInt> a(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[j * rows_ + i] = at(i, j);
    return BigIntMatrix(cols_, rows_, std::move(a));
}

namespace {

// Bareiss elimination on a working copy. Returns the number of pivots; if
// det != nullptr the matrix must be square and *det receives the exact
// determinant (0 when rank deficient).
std::size_t bareiss(std::vector<BigInt>& a, std::size_t rows, std::size_t cols,
                    BigInt* det) {
    BigInt prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // First nonzero pivot in row-major scan of the remaining block.
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) {
            if (det != nullptr) {
                *det = 0;
                return rank;
            }
            continue;
        }
        if (piv != rank) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
            sign = -sign;
        }
        const std::size_t pr = rank * cols;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::size_t ir = i * cols;
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt t = a[pr + col] * a[ir + j] - a[ir + col] * a[pr + j];
                // Divisions in the Bareiss scheme are exact.
                a[ir + j] = t / prev;
            }
            a[ir + col] = 0;
        }
        prev = a[pr + col];
        ++rank;
    }
    if (det != nullptr) {
        if (rank < rows)
            *det = 0;
        else
            *det = sign > 0 ? prev : -prev;
    }
    return rank;
}

std::vector<BigInt> copy_entries(const BigIntMatrix& m) {
    std::vector<BigInt> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    return a;
}

}  // namespace

BigInt determinant(const BigIntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() == 0) return 1;
    std::vector<BigInt> a = copy_entries(m);
    BigInt det;
    bareiss(a, m.rows(), m.cols(), &det);
    return det;
}

std::size_t rank(const BigIntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<BigInt> a = copy_entries(m);
    return bareiss(a, m.rows(), m.cols(), nullptr);
}

bool in_span(const std::vector<BigInt>& v,
             const std::vector<std::vector<BigInt>>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw std::invalid_argument("in_span: length mismatch");
    std::vector<std::vector<BigInt>> rows = basis;
    const std::size_t r0 = rank(BigIntMatrix::from_rows(rows));
    rows.push_back(v);
    return rank(BigIntMatrix::from_rows(rows)) == r0;
}

std::uint64_t determinant_mod(const BigIntMatrix& m, std::uint64_t p) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant_mod: matrix is not square");
    const std::size_t nr = m.rows();
    std::vector<std::uint64_t> a(nr * nr);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
            BigInt r = m.at(i, j) % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            a[i * nr + j] = r.get_ui();
        }
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(x) * y % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < nr; ++col) {
        std::size_t piv = col;
        while (piv < nr && a[piv * nr + col] == 0) ++piv;
        if (piv == nr) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < nr; ++j)
                std::swap(a[piv * nr + j], a[col * nr + j]);
            det = p - det;
        }
        const std::uint64_t pv = a[col * nr + col];
        det = mulmod(det, pv);
        const std::uint64_t inv = powmod(pv, p - 2);
        for (std::size_t i = col + 1; i < nr; ++i) {
            const std::uint64_t f = mulmod(a[i * nr + col], inv);
            if (f == 0) continue;
            for (std::size_t j = col; j < nr; ++j) {
                std::uint64_t s = mulmod(f, a[col * nr + j]);
                a[i * nr + j] = a[i * nr + j] >= s ? a[i * nr + j] - s
                                                   : a[i * nr + j] + p - s;
            }
        }
    }
    return det % p;
}

bool determinant_nonzero(const BigIntMatrix& m, bool filter) {
    if (filter) {
        // 2^61 - 1 is prime; a nonzero residue is a proof of nonvanishing.
        constexpr std::uint64_t kPrime = (1ull << 61) - 1;
        if (determinant_mod(m, kPrime) != 0) return true;
    }
    return determinant(m) != 0;
}

}  // namespace nashtoric
