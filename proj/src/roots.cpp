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

#include "chebx/roots.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace chebx {

std::size_t SturmChain::variations(const Rat& x) const {
    std::size_t count = 0;
    int last = 0;
    for (const IntPoly& p : polys) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (*p.degree() < 1) throw std::invalid_argument("squarefreeness needs degree >= 1");
    return *gcd_poly(p, derivative(p)).degree() == 0;
}

SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (*p.degree() < 1 || !is_squarefree(p)) throw NotSquarefree();

    auto primitive = [](const IntPoly& q) { return content_primitive(q).second; };

    SturmChain chain;
    chain.polys.push_back(primitive(p));
    chain.polys.push_back(primitive(derivative(p)));
    while (true) {
        const IntPoly& prev = chain.polys[chain.polys.size() - 2];
        const IntPoly& cur = chain.polys.back();
        if (*cur.degree() == 0) break;

        IntPoly rem = pseudo_rem(prev, cur);
        // pseudo_rem scaled prev by lc(cur)^(delta+1). When that factor is
        // negative the raw remainder sits on the wrong side of zero, so
        // flip only when the factor is positive: the stored element must be
        // a positive multiple of minus the rational remainder.
        assert(!rem.is_zero());  // would contradict squarefreeness
        const std::size_t delta = *prev.degree() - *cur.degree();
        const bool multiplier_negative = sgn(cur.leading()) < 0 && (delta + 1) % 2 == 1;
        IntPoly next = primitive(rem);
        if (!multiplier_negative) next = -next;
        chain.polys.push_back(std::move(next));
    }
    return chain;
}

std::size_t count_roots(const SturmChain& chain, const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::invalid_argument("count_roots needs a < b");
    const IntPoly& p = chain.polys.front();
    if (sign_at(p, a) == 0 || sign_at(p, b) == 0) throw EndpointIsRoot();
    const std::size_t va = chain.variations(a);
    const std::size_t vb = chain.variations(b);
    assert(va >= vb);
    return va - vb;
}

namespace {

// Recursive bisection state for one squarefree working polynomial. The
// working polynomial shrinks when an exact root is divided out, but the
// emitted intervals always certify the original target: a quotient root
// inside an interval is a target root, and the divided-out points are
// excluded by construction.
struct Isolator {
    std::vector<IsolInterval>& out;

    // lo_excluded / hi_excluded: that endpoint is an exact root of the
    // *original* target (a previously divided-out point). Such an interval
    // is never emitted even when it holds exactly one root of the working
    // polynomial: the target changes sign only strictly inside, and the
    // half-open closure on the hi side would even pick up a second target
    // root. Bisection separates the interior root from the bad endpoint;
    // it terminates because that root is a fixed distance away from it.
    void isolate(const IntPoly& p, const SturmChain& chain, const Rat& lo, const Rat& hi,
                 std::size_t vlo, std::size_t vhi, bool lo_excluded, bool hi_excluded) {
        const std::size_t count = vlo - vhi;
        if (count == 0) return;

        const Rat mid = midpoint(lo, hi);
        if (sign_at(p, mid) == 0) {
            // Exact rational root. Divide it out (the division is exact by
            // primitivity of den*X - num) and isolate both open sides
            // against the quotient.
            const IntPoly factor{-mid.num(), mid.den()};
            const IntPoly q = exact_div(p, factor);
            if (q.is_zero() || *q.degree() == 0) {
                out.push_back({mid, mid, mid});
                return;
            }
            const SturmChain qchain = sturm_chain(q);
            const std::size_t qlo = qchain.variations(lo);
            const std::size_t qmid = qchain.variations(mid);
            const std::size_t qhi = qchain.variations(hi);
            isolate(q, qchain, lo, mid, qlo, qmid, lo_excluded, /*hi_excluded=*/true);
            out.push_back({mid, mid, mid});
            isolate(q, qchain, mid, hi, qmid, qhi, /*lo_excluded=*/true, hi_excluded);
            return;
        }
        if (count == 1 && !lo_excluded && !hi_excluded) {
            assert(sign_at(p, lo) * sign_at(p, hi) < 0);
            out.push_back({lo, hi, std::nullopt});
            return;
        }
        // Interior midpoints can never coincide with a divided-out point
        // (those are always endpoints of the enclosing range), so the
        // children's fresh endpoint is clean.
        const std::size_t vmid = chain.variations(mid);
        isolate(p, chain, lo, mid, vlo, vmid, lo_excluded, /*hi_excluded=*/false);
        isolate(p, chain, mid, hi, vmid, vhi, /*lo_excluded=*/false, hi_excluded);
    }
};

}  // namespace

std::vector<IsolInterval> isolate_roots(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (!(a < b)) throw std::invalid_argument("isolate_roots needs a < b");
    if (*p.degree() == 0) return {};
    if (!is_squarefree(p)) throw NotSquarefree();
    if (sign_at(p, a) == 0 || sign_at(p, b) == 0) throw EndpointIsRoot();

    const SturmChain chain = sturm_chain(p);
    std::vector<IsolInterval> out;
    Isolator iso{out};
    iso.isolate(p, chain, a, b, chain.variations(a), chain.variations(b),
                /*lo_excluded=*/false, /*hi_excluded=*/false);
    return out;
}

IsolInterval refine(const IntPoly& p, const IsolInterval& iv, const Rat& width) {
    if (width.sign() <= 0) throw std::invalid_argument("refine needs width > 0");
    if (iv.is_exact()) return iv;

    Rat lo = iv.lo;
    Rat hi = iv.hi;
    const int slo = sign_at(p, lo);
    const int shi = sign_at(p, hi);
    if (slo == 0 || shi == 0 || slo == shi) {
        throw std::invalid_argument("interval does not certify a sign change of p");
    }
    while (hi - lo > width) {
        const Rat mid = midpoint(lo, hi);
        const int smid = sign_at(p, mid);
        if (smid == 0) return {mid, mid, mid};
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi, std::nullopt};
}

}  // namespace chebx
