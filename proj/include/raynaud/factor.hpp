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

#ifndef RAYNAUD_FACTOR_HPP
#define RAYNAUD_FACTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raynaud/poly.hpp"

namespace raynaud {

struct UnivariateFactor {
    FpPoly factor; // monic irreducible
    std::uint32_t multiplicity;
};

/// Full factorization of a univariate polynomial over F_p into monic
/// irreducibles (squarefree split, then distinct-degree, then equal-degree
/// splitting). Deterministically seeded. The unit is dropped.
std::vector<UnivariateFactor> factor_univariate(const FpPoly& f, const std::string& var);

/// Roots of f in F_p itself (with multiplicity), read off the linear factors.
std::vector<std::pair<FpElem, std::uint32_t>> rational_roots(const FpPoly& f,
                                                             const std::string& var);

/// Arithmetic in F_p[t]/(m) for a monic irreducible m. This is internal
/// machinery for confirming candidate zeros in small extensions; extension
/// elements are never part of any public result.
class ExtField {
  public:
    ExtField(const FpPoly& modulus, const std::string& var);

    using Elem = std::vector<FpElem>; // dense, size == degree()

    std::size_t degree() const { return mod_.size() - 1; }
    std::uint32_t p() const { return p_; }

    Elem zero() const;
    Elem one() const;
    Elem embed(const FpElem& c) const;
    /// Reduce a univariate polynomial in the construction variable mod m.
    Elem from_poly(const FpPoly& g) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

  private:
    std::uint32_t p_;
    std::vector<FpElem> mod_; // monic, ascending
};

} // namespace raynaud

#endif
