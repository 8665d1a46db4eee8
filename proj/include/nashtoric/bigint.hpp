#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace nashtoric {

using BigInt = mpz_class;

/// Binomial coefficient C(a,b) on naturals; 0 when b > a.
inline BigInt binom(unsigned long a, unsigned long b) {
    BigInt r;
    if (b > a) return 0;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

/// Binomial coefficient with integer (possibly negative) top argument,
/// i.e. the polynomial x(x-1)...(x-b+1)/b!. 0 for negative b.
inline BigInt binom_int(long long x, long long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    BigInt num = 1;
    for (long long i = 0; i < b; ++i) num *= BigInt(static_cast<long>(x - i));
    BigInt den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(b));
    return num / den;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace nashtoric
