#pragma once

#include <vector>

#include "nashtoric/eta.hpp"

namespace nashtoric {

// Four classical binomial identities, evaluated exactly for one triple.
bool check_riordan(unsigned n, unsigned m, unsigned p);

// det(binom(c_i, j))_{0<=i,j<=l} != 0 for strictly increasing positive c.
// Throws std::invalid_argument when c is empty, non-positive, or not
// strictly increasing.
bool check_vandermonde_matrix(const std::vector<long long>& c);

// bar(m,m) equals sum_{j=1}^{n} binom(m,j) * v_j, where
// v_j = sum_{i=1}^{j} (-1)^{j-i} binom(j,i) bar(i,i).
bool check_diagonal_span(unsigned n, unsigned m);

// The alternating double sum of bar lifts vanishes in Z^{lambda_{2,n}}.
// `transposed` swaps the two point coordinates. Requires 1 <= l <= n.
bool check_vanishing_sum(unsigned n, unsigned a, unsigned r, unsigned l,
                         bool transposed);

// Row span of {T_0 union (T_i + shifts[i-1]*(1,1), i=1..l)} bar lifts equals
// the row span of {T_0 union ... union T_l} bar lifts. Requires 1 <= l <= n
// and shifts.size() == l.
bool check_translation_span(unsigned n, const EtaSequence& eta, unsigned l,
                            const std::vector<long long>& shifts);

}  // namespace nashtoric
