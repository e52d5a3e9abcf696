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

#include "raynaud/picard.hpp"

#include <numeric>
#include <stdexcept>

#include "raynaud/fp.hpp"

namespace raynaud {

namespace {
std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}
} // namespace

std::uint64_t RaynaudParams::pn() const { return ipow(p, n); }

RaynaudParams RaynaudParams::standard(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                      std::uint32_t l) {
    require_prime_modulus(p);
    if (n < 1 || e < 1 || l < 2) throw std::invalid_argument("need n >= 1, e >= 1, l >= 2");
    RaynaudParams P;
    P.p = p;
    P.n = n;
    P.e = e;
    P.l = l;
    if (n * (64 - __builtin_clzll(p)) > 40)
        throw std::invalid_argument("parameters beyond desk scale: p^n too large");
    std::uint64_t q = P.pn();
    if (q * e > (1ull << 24))
        throw std::invalid_argument("parameters beyond desk scale: curve degree too large");
    if ((q + 1) % l != 0)
        throw std::invalid_argument("inconsistent Raynaud parameters: l does not divide p^n + 1");
    P.d = (q + 1) / l;
    std::int64_t deg = std::int64_t(q) * e;
    P.deg_D = std::int64_t(e) * (deg - 3);
    if (P.deg_D <= 0) throw std::invalid_argument("degenerate family: deg D <= 0");
    if (P.deg_D % l != 0)
        throw std::invalid_argument("inconsistent Raynaud parameters: l does not divide deg D");
    P.N = DivisorOnC::infinity_times(P.deg_D / l);
    P.genus2m2 = deg * (deg - 3);
    P.k = e % l == 0 ? e / l : 0; // e = k l in the convenient parametrization
    if (P.genus2m2 != std::int64_t(q) * P.deg_D)
        throw std::logic_error("2g - 2 != p^n deg D");
    return P;
}

std::string PicPE::to_string() const {
    return "O(" + std::to_string(h) + ") + pi*(" + base.to_string() + ")";
}

PicPE PicPE::T(const RaynaudParams& P) {
    // O(T) = O(p^n) - pi^*(p^n D) with D = l N
    return {std::int64_t(P.pn()), P.N * (-std::int64_t(P.pn()) * std::int64_t(P.l))};
}

PicPE PicPE::M(const RaynaudParams& P) {
    return {std::int64_t(P.d), P.N * (-std::int64_t(P.pn()))};
}

std::string PicX::to_string() const {
    return std::to_string(a) + "*S~ + phi*(" + base.to_string() + ")";
}

PicX PicX::Ttilde(const RaynaudParams& P) {
    return {std::int64_t(P.pn()), P.N * (-std::int64_t(P.pn()))};
}

PicX pullback_to_X(const PicPE& c, const RaynaudParams& P) {
    return {c.h * std::int64_t(P.l), c.base};
}

std::vector<PicPE> push_psi_neg(std::uint64_t m, const RaynaudParams& P) {
    std::uint64_t q = m / P.l, r = m % P.l;
    std::vector<PicPE> out;
    for (std::uint32_t i = 0; i < P.l; ++i) {
        std::int64_t s_twist = (i < r) ? -std::int64_t(q) - 1 : -std::int64_t(q);
        out.push_back(PicPE::M(P) * (-std::int64_t(i)) + PicPE::S() * s_twist);
    }
    return out;
}

std::vector<PicPE> push_psi_pos(std::uint64_t m, const RaynaudParams& P) {
    std::uint64_t q = m / P.l, r = m % P.l;
    std::vector<PicPE> out;
    for (std::uint32_t i = 0; i < P.l; ++i) {
        std::int64_t s_twist = (i < P.l - r) ? std::int64_t(q) : std::int64_t(q) + 1;
        out.push_back(PicPE::M(P) * (-std::int64_t(i)) + PicPE::S() * s_twist);
    }
    return out;
}

std::vector<PicPE> adjoint_decomposition(std::uint64_t m, const DivisorOnC& Qdiv,
                                         const RaynaudParams& P) {
    if (m < 1) throw std::invalid_argument("adjoint decomposition needs m >= 1");
    std::uint64_t q = m / P.l, r = m % P.l;
    std::vector<PicPE> out;
    for (std::uint32_t i = 0; i < P.l; ++i) {
        std::int64_t s_twist = std::int64_t(q) + std::int64_t((i + r) / P.l);
        out.push_back(PicPE::M(P) * (-std::int64_t(i)) + PicPE::S() * s_twist +
                      PicPE::pullback(Qdiv));
    }
    // two routes to the same decomposition
    std::vector<PicPE> viapush = push_psi_pos(m, P);
    for (std::uint32_t i = 0; i < P.l; ++i)
        if (!(out[i] == viapush[i] + PicPE::pullback(Qdiv)))
            throw std::logic_error("adjoint decomposition disagrees with pushforward route");
    return out;
}

std::vector<ModuleAction> module_action_table(std::uint64_t m, const RaynaudParams& P) {
    std::uint64_t r = m % P.l;
    std::vector<ModuleAction> out;
    for (std::uint32_t i = 1; i < P.l; ++i) {
        bool ideal_both = i + r <= P.l - 1; // i <= l - r - 1
        out.push_back({i, ideal_both ? ModuleAction::Twist::MinusSMinusT
                                     : ModuleAction::Twist::MinusT});
    }
    return out;
}

Rational64::Rational64(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational64::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational64 intersection_number(const PicX& A, const PicX& B, const RaynaudParams& P) {
    // S~^2 = (2g-2)/(p^n l); valid parameters make this integral = deg N
    std::int64_t pnl = std::int64_t(P.pn()) * P.l;
    if (P.genus2m2 % pnl != 0)
        throw std::invalid_argument("inconsistent Raynaud parameters: (2g-2)/(p^n l) not integral");
    std::int64_t s2 = P.genus2m2 / pnl;
    if (s2 != P.N.degree()) throw std::logic_error("S~^2 != deg N");
    std::int64_t val = A.a * B.a * s2 + A.a * B.base.degree() + B.a * A.base.degree();
    return Rational64(val, 1);
}

PicX canonical_class(const RaynaudParams& P) {
    std::int64_t pn = std::int64_t(P.pn());
    std::int64_t a = pn * P.l - P.l - pn - 1;
    return {a, P.N * (pn + P.l)};
}

PicX relative_canonical_class(const RaynaudParams& P) {
    std::int64_t pn = std::int64_t(P.pn());
    std::int64_t a = pn * P.l - P.l - pn - 1;
    return {a, P.N * (pn + P.l - pn * P.l)};
}

std::int64_t SheafTerm::degree(const RaynaudParams& P) const {
    if (dropped) return 0;
    return sym_j * (sym_j + 1) / 2 * P.deg_D + (sym_j + 1) * twist.degree();
}

std::string SheafTerm::to_string() const {
    if (dropped) return "0 (Sym^" + std::to_string(sym_j) + " dropped)";
    return "Sym^" + std::to_string(sym_j) + "(E) (x) O(" + twist.to_string() + ")";
}

std::int64_t SheafOnC::rank() const {
    std::int64_t r = 0;
    for (auto& t : terms) r += t.rank();
    return r;
}

std::int64_t SheafOnC::degree(const RaynaudParams& P) const {
    std::int64_t d = 0;
    for (auto& t : terms) d += t.degree(P);
    return d;
}

bool SheafOnC::all_dropped() const {
    for (auto& t : terms)
        if (!t.dropped) return false;
    return true;
}

SheafOnC pi_pushforward(const PicPE& c, const RaynaudParams& P) {
    (void)P;
    SheafOnC out;
    out.terms.push_back(SheafTerm{c.h, c.base, c.h < 0});
    return out;
}

SheafOnC r1_dual_decomposition(std::uint32_t m, const DivisorOnC& Qdiv,
                               const RaynaudParams& P) {
    std::int64_t pn = std::int64_t(P.pn());
    std::int64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= P.p;
    std::int64_t q = pm / P.l, r = pm % P.l;

    // H^{p^m} (x) omega_{X/C} as a class on X, then psi_* then pi_*
    PicX cls = PicX::Stilde() * pm + PicX::pullback(Qdiv * pm) + relative_canonical_class(P);
    if (cls.a < 0) throw std::logic_error("negative multiple in r1 dual decomposition");

    SheafOnC out;
    std::vector<PicPE> pushed = push_psi_pos(std::uint64_t(cls.a), P);
    for (std::uint32_t i = 0; i < P.l; ++i) {
        PicPE term = pushed[i] + PicPE::pullback(cls.base);
        SheafOnC piterm = pi_pushforward(term, P);
        // closed-form exponent, asserted against the composed route
        std::int64_t expected = -std::int64_t(i) * std::int64_t(P.d) + pn - std::int64_t(P.d) +
                                q + (std::int64_t(i) < std::int64_t(P.l) - r ? -1 : 0);
        if (piterm.terms[0].sym_j != expected)
            throw std::logic_error("r1 dual decomposition exponent mismatch");
        out.terms.push_back(piterm.terms[0]);
    }
    return out;
}

} // namespace raynaud
