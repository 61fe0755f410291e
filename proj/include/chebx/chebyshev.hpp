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

#ifndef CHEBX_CHEBYSHEV_HPP
#define CHEBX_CHEBYSHEV_HPP

#include <cstddef>
#include <deque>
#include <mutex>
#include <string>

#include "chebx/poly.hpp"

namespace chebx {

/// The three polynomial families handled by this library.
///
///   FirstKind          T_n:  T_0 = 1, T_1 = X,  T_{n+2} = 2X T_{n+1} - T_n
///   SecondKind         U_n:  U_0 = 1, U_1 = 2X, U_{n+2} = 2X U_{n+1} - U_n
///   ShiftedFirstKind   T*_n = T_n(2X - 1), root interval moved to (0, 1)
enum class ChebKind { FirstKind, SecondKind, ShiftedFirstKind };

std::string to_string(ChebKind kind);

/// Grow-only memo table for the three ladders. Entries are immutable once
/// computed; extension happens under a mutex, so a shared cache can be read
/// from several threads.
class ChebCache {
  public:
    const IntPoly& first_kind(std::size_t n);
    const IntPoly& second_kind(std::size_t n);
    const IntPoly& shifted_first_kind(std::size_t n);
    const IntPoly& get(ChebKind kind, std::size_t n);

    /// Replaces the cached T_n with a copy whose constant coefficient is
    /// off by one. Exists so the failure path of the verification suites
    /// can be exercised end to end (`verify --inject-defect`); never call
    /// it on the shared default cache.
    void corrupt_first_kind(std::size_t n);

  private:
    void extend_locked(std::size_t n);

    std::mutex mu_;
    // deques keep references to existing entries valid while growing
    std::deque<IntPoly> t_, u_, ts_;
};

/// Process-wide shared cache used by the suite drivers by default.
ChebCache& default_cache();

/// Polynomial of the requested family built from the defining recurrence
/// (the shifted kind is the first kind composed with 2X - 1).
IntPoly gen_recurrence(ChebKind kind, std::size_t n, ChebCache& cache = default_cache());

/// Same polynomials from the explicit coefficient formulas
///
///   U_n: coeff of X^(n-2k) = (-1)^k 2^(n-2k) C(n-k, k)
///   T_n: coeff of X^(n-2k) = (-1)^k 2^(n-2k-1) (C(n-k, k) + C(n-k-1, k-1))
///
/// computed entirely over the integers; the lone halving (even n, k = n/2)
/// is exact. Defined for n >= 1 and the first two kinds only; an
/// independent construction path from gen_recurrence, kept separate so the
/// two can be cross-checked. Throws UnsupportedKind for the shifted kind
/// and for n = 0.
IntPoly gen_closed_form(ChebKind kind, std::size_t n);

/// Monic integer rescalings used by the rational root analysis:
///
///   FirstKind         2 T_n(X/2)
///   SecondKind        U_n(X/2)
///   ShiftedFirstKind  2 T*_n(X/4)
///
/// Integrality of every coefficient is a theorem; the construction checks
/// it anyway and throws NonIntegralCoefficient on failure, since that can
/// only mean a generator bug. pre: n >= 1.
IntPoly monic_transform(ChebKind kind, std::size_t n, ChebCache& cache = default_cache());

/// Exact value at 1: equals 1 for the first kind and n + 1 for the second.
/// Throws UnsupportedKind for the shifted kind.
Rat value_at_one(ChebKind kind, std::size_t n, ChebCache& cache = default_cache());

}  // namespace chebx

#endif  // CHEBX_CHEBYSHEV_HPP
