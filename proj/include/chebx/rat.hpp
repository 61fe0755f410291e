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

#ifndef CHEBX_RAT_HPP
#define CHEBX_RAT_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include "chebx/int.hpp"

namespace chebx {

/// Exact rational number in canonical form: gcd(|num|, den) = 1 and
/// den >= 1 always hold; zero is 0/1.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    /// True when the denominator is a power of two (so the value survives
    /// repeated interval bisection without leaving the representation).
    bool is_dyadic() const;
    int sign() const { return sgn(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.q_ + b.q_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.q_ - b.q_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.q_ * b.q_); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Renders "num/den", or just "num" for integers.
    std::string to_string() const;
    /// Parses "num", "num/den" or "-num/den"; throws std::invalid_argument
    /// on malformed input or a zero denominator.
    static Rat parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;  // invariant: canonicalized
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

}  // namespace chebx

#endif  // CHEBX_RAT_HPP
