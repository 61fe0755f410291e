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

#ifndef CHEBX_ERRORS_HPP
#define CHEBX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebx {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("polynomial division is not exact over the integers") {}
};

struct UnsupportedKind : Error {
    explicit UnsupportedKind(const std::string& what) : Error(what) {}
};

// Raised when a rescaled generator produces a fractional coefficient.
// The transforms used here are integral theorems, so this means a bug.
struct NonIntegralCoefficient : Error {
    NonIntegralCoefficient() : Error("monic transform produced a non-integral coefficient") {}
};

struct MismatchedDiscriminant : Error {
    MismatchedDiscriminant() : Error("quadratic extension elements have different discriminants") {}
};

struct ZeroDivisor : Error {
    ZeroDivisor() : Error("element of norm zero is not invertible") {}
};

struct ExcludedPoint : Error {
    ExcludedPoint() : Error("closed form is undefined at w = 1 and w = -1") {}
};

// The closed forms evaluate to plain rationals; a surviving surd
// component means the arithmetic is broken.
struct InternalNonRationalResult : Error {
    InternalNonRationalResult() : Error("closed form evaluated to a non-rational element") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("polynomial has a repeated root") {}
};

struct EndpointIsRoot : Error {
    EndpointIsRoot() : Error("interval endpoint is a root of the polynomial") {}
};

}  // namespace chebx

#endif  // CHEBX_ERRORS_HPP
