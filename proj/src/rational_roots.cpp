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

#include "chebx/rational_roots.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace chebx {

namespace {

// Candidate screening runs modulo a word-sized prime before any exact
// check. A root makes the homogenized value den^deg * p(num/den) exactly
// zero, hence zero mod anything, so the filter only ever discards
// non-roots; the rare false survivor is caught by the exact evaluation.
constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kFilterPrime);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;  // both < 2^61, no overflow
    return s >= kFilterPrime ? s - kFilterPrime : s;
}

std::uint64_t mod_of(const Int& v) { return mpz_fdiv_ui(v.get_mpz_t(), kFilterPrime); }

// den^deg * p(num/den) mod the filter prime, from premodded coefficients.
std::uint64_t homogeneous_mod(const std::vector<std::uint64_t>& coeffs_mod, std::uint64_t num_mod,
                              std::uint64_t den_mod) {
    std::uint64_t acc = coeffs_mod.back();
    std::uint64_t den_pow = 1;
    for (std::size_t i = coeffs_mod.size() - 1; i-- > 0;) {
        den_pow = mul_mod(den_pow, den_mod);
        acc = add_mod(mul_mod(acc, num_mod), mul_mod(coeffs_mod[i], den_pow));
    }
    return acc;
}

// Positive divisors of n > 0 via trial-division factoring. Complete (the
// leftover cofactor after the sqrt bound is prime); fine at this scale.
std::vector<Int> positive_divisors(Int n) {
    std::vector<std::pair<Int, unsigned>> factors;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (divides(p, n)) {
            n = exact_quotient(n, p);
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    strip(Int(2));
    for (Int p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) factors.emplace_back(n, 1);

    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rat> rational_roots_generic(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();

    // Strip the X^v factor; 0 is a root iff v >= 1.
    std::size_t v = 0;
    while (sgn(p.coeff(v)) == 0) ++v;
    std::set<Rat> roots;
    if (v >= 1) roots.insert(Rat(0));

    std::vector<Int> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(v), p.coeffs().end());
    if (c.size() > 1) {
        const IntPoly q{std::vector<Int>(c)};
        std::vector<std::uint64_t> cmod(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) cmod[i] = mod_of(c[i]);

        const std::vector<Int> nums = positive_divisors(abs(c.front()));
        const std::vector<Int> dens = positive_divisors(abs(c.back()));
        for (const Int& den : dens) {
            const std::uint64_t den_mod = mod_of(den);
            for (const Int& num : nums) {
                if (gcd(num, den) != 1) continue;  // lowest terms only
                for (int s : {1, -1}) {
                    const Int snum = s > 0 ? num : Int(-num);
                    if (homogeneous_mod(cmod, mod_of(snum), den_mod) != 0) continue;
                    const Rat cand(snum, den);
                    if (eval_rat(q, cand).is_zero()) roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

std::vector<Rat> expected_rational_roots(ChebKind kind, std::size_t n) {
    if (n == 0) throw std::invalid_argument("classification defined for n >= 1");
    std::set<Rat> roots;
    switch (kind) {
        case ChebKind::FirstKind:
            if (n % 2 == 1) roots.insert(Rat(0));
            break;
        case ChebKind::SecondKind:
            if (n % 2 == 1) roots.insert(Rat(0));
            if (n % 3 == 2) {
                roots.insert(Rat(1, 2));
                roots.insert(Rat(-1, 2));
            }
            break;
        case ChebKind::ShiftedFirstKind:
            if (n % 2 == 1) roots.insert(Rat(1, 2));
            break;
    }
    return {roots.begin(), roots.end()};
}

namespace {

// Root scale of the monic transform: y = scale * x maps roots of the raw
// polynomial to roots of the transform.
long monic_scale(ChebKind kind) {
    return kind == ChebKind::ShiftedFirstKind ? 4 : 2;
}

}  // namespace

RationalRootReport cross_check(ChebKind kind, std::size_t n, ChebCache& cache) {
    if (n == 0) throw std::invalid_argument("cross_check defined for n >= 1");

    const std::vector<Rat> raw = rational_roots_generic(cache.get(kind, n));

    const Rat scale(monic_scale(kind));
    std::vector<Rat> via_monic;
    for (const Rat& y : rational_roots_generic(monic_transform(kind, n, cache))) {
        via_monic.push_back(y / scale);
    }
    std::sort(via_monic.begin(), via_monic.end());

    const std::vector<Rat> expected = expected_rational_roots(kind, n);
    const bool agrees = raw == via_monic && raw == expected;
    return {kind, n, raw, expected, agrees};
}

}  // namespace chebx
