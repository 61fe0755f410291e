/*
   Copyright 2026 The chebx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHEBX_INT_HPP
#define CHEBX_INT_HPP

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace chebx {

// Arbitrary-precision integer. Coefficients of the polynomials handled
// here grow like 2^n, so a fixed-width type is not an option.
using Int = mpz_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient n / d, valid only when d divides n.
inline Int exact_quotient(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

/// Binomial coefficient C(n, k) by the running-product method; every
/// intermediate division is exact. Returns 0 for k > n.
Int binomial(unsigned long n, unsigned long k);

}  // namespace chebx

#endif  // CHEBX_INT_HPP
