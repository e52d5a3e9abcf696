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

#ifndef RAYNAUD_POLY_HPP
#define RAYNAUD_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raynaud/fp.hpp"

namespace raynaud {

/// Process-wide interning of variable names; append-only and thread-safe.
struct VarTable {
    static std::uint32_t id(const std::string& name);
    static const std::string& name(std::uint32_t id);
};

/// A monomial as a sorted sparse exponent vector; only nonzero exponents stored.
class Monomial {
  public:
    Monomial() = default;
    static Monomial var(const std::string& name, std::uint64_t exp = 1);

    std::uint64_t degree() const;
    std::uint64_t deg_in(std::uint32_t var_id) const;
    bool is_unit() const { return e_.empty(); }

    Monomial operator*(const Monomial& o) const;
    /// Componentwise quotient; nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const;
    Monomial pow(std::uint64_t k) const;
    bool divides(const Monomial& o) const { return o.divide(*this).has_value(); }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::pair<std::uint32_t, std::uint64_t>>& entries() const { return e_; }
    std::vector<std::pair<std::uint32_t, std::uint64_t>>& entries() { return e_; }

  private:
    std::vector<std::pair<std::uint32_t, std::uint64_t>> e_;
};

/// Graded lexicographic order on monomials (total degree, then exponents on
/// lower variable ids weigh more). Multiplicative, so division terminates.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over F_p in canonical form: no zero
/// coefficients, unique exponent vectors.
class FpPoly {
  public:
    explicit FpPoly(std::uint32_t p);

    static FpPoly zero(std::uint32_t p) { return FpPoly(p); }
    static FpPoly constant(const FpElem& c);
    static FpPoly constant(std::int64_t c, std::uint32_t p) { return constant(fp_signed(c, p)); }
    static FpPoly variable(const std::string& name, std::uint32_t p);
    static FpPoly term(const FpElem& c, const Monomial& m);

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant value; requires is_constant().
    FpElem constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, FpElem, GrlexLess>& terms() const { return terms_; }

    std::uint64_t degree() const;               // total degree; 0 for the zero poly
    std::uint64_t deg_in(const std::string& var) const;
    bool involves(const std::string& var) const { return deg_in(var) > 0; }
    std::vector<std::string> vars_used() const;

    FpElem coeff(const Monomial& m) const;
    std::pair<Monomial, FpElem> leading_term() const; // w.r.t. grlex; requires nonzero

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly& operator+=(const FpPoly& o) { return *this = *this + o; }
    FpPoly& operator-=(const FpPoly& o) { return *this = *this - o; }
    FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }
    FpPoly operator*(const FpElem& c) const;
    FpPoly pow(std::uint64_t k) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    /// Formal partial derivative with the characteristic-p exponent rule.
    /// Throws if var is not among the polynomial's variables.
    FpPoly derivative(const std::string& var) const;
    /// Partial derivative, allowing variables the polynomial does not involve
    /// (the result is then zero).
    FpPoly derivative_opt(const std::string& var) const;

    /// f^(p^k), computed by multiplying every exponent by p^k.
    FpPoly frobenius_power(std::uint32_t k) const;

    /// g with g^p = f if every exponent is divisible by p; NoRoot otherwise.
    std::optional<FpPoly> p_th_root() const;

    /// Substitute a polynomial for a variable.
    FpPoly substitute(const std::string& var, const FpPoly& value) const;
    /// Substitute a field constant for a variable.
    FpPoly substitute(const std::string& var, const FpElem& value) const;

    /// View as univariate in var: coefficient polynomials by ascending degree.
    std::vector<FpPoly> univariate_view(const std::string& var) const;
    static FpPoly from_univariate(const std::string& var, const std::vector<FpPoly>& coeffs,
                                  std::uint32_t p);

    /// Mul by a single term.
    FpPoly times_term(const FpElem& c, const Monomial& m) const;

    std::string to_string() const;
    static FpPoly parse(const std::string& text, std::uint32_t p);

    void insert_term(const Monomial& m, const FpElem& c); // adds, keeping canonical form

  private:
    std::uint32_t p_;
    std::map<Monomial, FpElem, GrlexLess> terms_;
};

/// Res_var(f, g) by fraction-free subresultant PRS over the remaining variables.
FpPoly resultant(const FpPoly& f, const FpPoly& g, const std::string& var);

/// Monic gcd of two univariate polynomials in the same variable.
FpPoly gcd_univariate(const FpPoly& f, const FpPoly& g, const std::string& var);

/// Exact quotient a/b, nullopt if b does not divide a.
std::optional<FpPoly> divide_exact(const FpPoly& a, const FpPoly& b);

/// Canonical normal form of g modulo the single polynomial f (grlex division).
/// Two polynomials are congruent mod (f) iff their normal forms agree.
FpPoly nf_mod(const FpPoly& g, const FpPoly& f);

} // namespace raynaud

#endif
