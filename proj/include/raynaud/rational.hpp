/*
   Copyright 2026 the raynaud kernel authors

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

#ifndef RAYNAUD_RATIONAL_HPP
#define RAYNAUD_RATIONAL_HPP

#include <string>

#include "raynaud/poly.hpp"

namespace raynaud {

/// Quotient of two FpPoly with nonzero denominator. Reduction is best-effort
/// (shared monomial content, univariate gcd when both parts are univariate in
/// the same variable); equality is decided by cross-multiplication.
class FpRational {
  public:
    explicit FpRational(const FpPoly& num);
    FpRational(const FpPoly& num, const FpPoly& den);

    static FpRational zero(std::uint32_t p) { return FpRational(FpPoly::zero(p)); }
    static FpRational one(std::uint32_t p) { return FpRational(FpPoly::constant(1, p)); }

    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    std::uint32_t modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }

    FpRational operator+(const FpRational& o) const;
    FpRational operator-(const FpRational& o) const;
    FpRational operator*(const FpRational& o) const;
    FpRational operator/(const FpRational& o) const;
    FpRational operator-() const;
    FpRational inverse() const;
    FpRational pow(std::uint64_t k) const;

    bool operator==(const FpRational& o) const; // cross-multiplication
    bool operator!=(const FpRational& o) const { return !(*this == o); }

    /// Quotient-rule derivative: (n'd - nd') / d^2.
    FpRational derivative(const std::string& var) const;

    std::string to_string() const;

  private:
    void reduce();
    FpPoly num_, den_;
};

} // namespace raynaud

#endif
