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

#ifndef RAYNAUD_PICARD_HPP
#define RAYNAUD_PICARD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raynaud/divisor.hpp"

namespace raynaud {

/// Parameters of the l-cyclic cover X of P(E): l | p^n + 1 and l | deg D,
/// d = (p^n + 1)/l, D = l N, 2g - 2 = p^n l deg N. Constructed for the
/// standard family where deg D = e(p^n e - 3).
struct RaynaudParams {
    std::uint32_t p = 2, n = 1, e = 3, l = 3, k = 1;
    std::uint64_t d = 1;       // (p^n + 1)/l
    std::int64_t deg_D = 0;    // e(p^n e - 3)
    DivisorOnC N;              // D = l N, supported at inf
    std::int64_t genus2m2 = 0; // 2g - 2 = p^n e (p^n e - 3)

    static RaynaudParams standard(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                  std::uint32_t l);

    std::uint64_t pn() const; // p^n
    std::int64_t deg_N() const { return N.degree(); }
};

/// Divisor class on the ruled surface P(E) as h * O(1) + pi^* base, with the
/// normalization O(S) = O(1) and O(T) = O(p^n) - pi^*(p^n D).
struct PicPE {
    std::int64_t h = 0;
    DivisorOnC base;

    PicPE operator+(const PicPE& o) const { return {h + o.h, base + o.base}; }
    PicPE operator-(const PicPE& o) const { return {h - o.h, base - o.base}; }
    PicPE operator*(std::int64_t s) const { return {h * s, base * s}; }
    bool operator==(const PicPE& o) const { return h == o.h && base == o.base; }
    std::string to_string() const;

    static PicPE S() { return {1, DivisorOnC{}}; }
    static PicPE T(const RaynaudParams& P);
    static PicPE M(const RaynaudParams& P); // O(d) - pi^*(p^n N)
    static PicPE pullback(const DivisorOnC& B) { return {0, B}; }
};

/// Divisor class on the n-Raynaud surface X as a * S~ + phi^* base, with
/// psi^* (h, B) = (l h, B) and O(T~) = O(p^n S~) - phi^*(p^n N).
struct PicX {
    std::int64_t a = 0;
    DivisorOnC base;

    PicX operator+(const PicX& o) const { return {a + o.a, base + o.base}; }
    PicX operator-(const PicX& o) const { return {a - o.a, base - o.base}; }
    PicX operator*(std::int64_t s) const { return {a * s, base * s}; }
    bool operator==(const PicX& o) const { return a == o.a && base == o.base; }
    std::string to_string() const;

    static PicX Stilde() { return {1, DivisorOnC{}}; }
    static PicX Ttilde(const RaynaudParams& P);
    static PicX pullback(const DivisorOnC& B) { return {0, B}; }
};

PicX pullback_to_X(const PicPE& c, const RaynaudParams& P);

/// The l summands of psi_* O_X(-m S~): M^{-i}(-(q+1)S) for i < r and
/// M^{-i}(-q S) for r <= i < l, where m = q l + r.
std::vector<PicPE> push_psi_neg(std::uint64_t m, const RaynaudParams& P);

/// The l summands of psi_* O_X(m S~): M^{-i}(q S) for i < l - r and
/// M^{-i}((q+1) S) for i >= l - r.
std::vector<PicPE> push_psi_pos(std::uint64_t m, const RaynaudParams& P);

/// The adjoint decomposition M_i = M^{-i}((q + floor((i+r)/l)) S) + pi^* Q;
/// coincides termwise with push_psi_pos(m) twisted by pi^* Q (asserted).
std::vector<PicPE> adjoint_decomposition(std::uint64_t m, const DivisorOnC& Qdiv,
                                         const RaynaudParams& P);

/// How each summand M_i, i >= 1, maps into M_0 under the module action: via
/// the ideal sheaf O(-S-T) when i <= l - r - 1, via O(-T) when i >= l - r.
struct ModuleAction {
    std::uint32_t i;
    enum class Twist { MinusSMinusT, MinusT } twist;
};
std::vector<ModuleAction> module_action_table(std::uint64_t m, const RaynaudParams& P);

/// Exact rational intersection number of two classes on X, generated by
/// S~^2 = deg N, S~ . phi^* B = deg B, phi^* B . phi^* B' = 0.
struct Rational64 {
    std::int64_t num = 0, den = 1;
    Rational64() = default;
    Rational64(std::int64_t n, std::int64_t d);
    bool operator==(const Rational64& o) const { return num == o.num && den == o.den; }
    bool is_integer() const { return den == 1; }
    std::string to_string() const;
};

Rational64 intersection_number(const PicX& A, const PicX& B, const RaynaudParams& P);

/// omega_X = (p^n l - l - p^n - 1) S~ + phi^*((p^n + l) N).
PicX canonical_class(const RaynaudParams& P);
/// omega_{X/C} = omega_X - phi^* omega_C = same S~ part, base (p^n + l - p^n l) N.
PicX relative_canonical_class(const RaynaudParams& P);

/// A formal direct sum of Sym^j(E) twisted by line bundles on C. Terms with
/// j < 0 are the zero sheaf: kept, flagged dropped, excluded from rank/degree.
struct SheafTerm {
    std::int64_t sym_j;
    DivisorOnC twist;
    bool dropped;

    std::int64_t rank() const { return dropped ? 0 : sym_j + 1; }
    /// deg(Sym^j E (B)) = j(j+1)/2 deg D + (j+1) deg B from the L^i filtration.
    std::int64_t degree(const RaynaudParams& P) const;
    std::string to_string() const;
};

struct SheafOnC {
    std::vector<SheafTerm> terms;
    std::int64_t rank() const;
    std::int64_t degree(const RaynaudParams& P) const;
    bool all_dropped() const;
};

/// pi_*(O(j) + pi^* B) = Sym^j(E)(B) for j >= 0, the zero sheaf for j < 0.
SheafOnC pi_pushforward(const PicPE& c, const RaynaudParams& P);

/// (R^1 phi_* H^{-p^m})^dual = phi_*(H^{p^m} (x) omega_{X/C}) for
/// H = O(S~ + phi^* Qdiv), expanded into Sym terms with exponents
/// -i d + p^n - d + q - 1 (i < l - r) and -i d + p^n - d + q (i >= l - r)
/// where p^m = q l + r.
SheafOnC r1_dual_decomposition(std::uint32_t m, const DivisorOnC& Qdiv,
                               const RaynaudParams& P);

} // namespace raynaud

#endif
