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

#ifndef RAYNAUD_SERIES_HPP
#define RAYNAUD_SERIES_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "raynaud/poly.hpp"
#include "raynaud/rational.hpp"

namespace raynaud {

/// Truncated Laurent series in one parameter over F_p. Exponents below `prec`
/// are exact; `prec == EXACT` means the series is an exact Laurent polynomial.
/// A series with no stored terms is "zero up to precision": its valuation is
/// unknown and reported as nullopt, never silently treated as 0.
class LaurentSeries {
  public:
    static constexpr std::int64_t EXACT = std::numeric_limits<std::int64_t>::max();

    LaurentSeries(std::string param, std::uint32_t p, std::int64_t prec = EXACT);

    static LaurentSeries zero(const std::string& param, std::uint32_t p, std::int64_t prec);
    /// Exact series from a polynomial univariate in param.
    static LaurentSeries from_poly(const FpPoly& f, const std::string& param);
    static LaurentSeries monomial(const std::string& param, const FpElem& c, std::int64_t exp);

    const std::string& param() const { return param_; }
    std::uint32_t modulus() const { return p_; }
    std::int64_t precision() const { return prec_; }
    const std::map<std::int64_t, FpElem>& coeffs() const { return c_; }
    FpElem coeff(std::int64_t e) const;

    /// Smallest exponent with nonzero coefficient; nullopt when the series is
    /// identically zero up to its precision.
    std::optional<std::int64_t> valuation() const;
    bool known_zero_to_precision() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && prec_ == EXACT; }
    /// Lower bound for the valuation (precision when no term is stored).
    std::int64_t valuation_lower_bound() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries invert() const; // requires a known valuation
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.invert(); }
    LaurentSeries pow(std::uint64_t k) const;
    LaurentSeries shifted(std::int64_t k) const; // multiply by param^k
    LaurentSeries truncated(std::int64_t T) const;
    LaurentSeries derivative() const; // d/d(param), char-p exponent rule

    bool same_coeffs(const LaurentSeries& o) const { return c_ == o.c_; }
    std::string to_string(std::size_t max_terms = 12) const;

    void set_coeff(std::int64_t e, const FpElem& c);

  private:
    void check_compatible(const LaurentSeries& o) const;
    std::string param_;
    std::uint32_t p_;
    std::int64_t prec_;
    std::map<std::int64_t, FpElem> c_;
};

/// Evaluate a bivariate polynomial f(xvar, yvar) at xvar -> s, yvar -> the
/// series parameter (Horner in xvar).
LaurentSeries eval_poly_at_series(const FpPoly& f, const std::string& xvar,
                                  const LaurentSeries& s, const std::string& yvar);

/// Evaluate a rational function the same way; denominator must have a known
/// valuation after substitution.
LaurentSeries eval_rational_at_series(const FpRational& g, const std::string& xvar,
                                      const LaurentSeries& s, const std::string& yvar);

} // namespace raynaud

#endif
