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

#include "raynaud/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace raynaud {

namespace {

// Dense univariate arithmetic over F_p, coefficients ascending.
using UP = std::vector<FpElem>;

void trim(UP& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

bool is_zero(const UP& f) { return f.empty(); }
std::size_t deg(const UP& f) { return f.empty() ? 0 : f.size() - 1; }

UP up_zero() { return {}; }

UP up_const(const FpElem& c) {
    UP f;
    if (!c.is_zero()) f.push_back(c);
    return f;
}

UP up_x(std::uint32_t p) { return {FpElem(0, p), FpElem(1, p)}; }

UP up_add(const UP& a, const UP& b, std::uint32_t p) {
    UP r(std::max(a.size(), b.size()), FpElem(0, p));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UP up_sub(const UP& a, const UP& b, std::uint32_t p) {
    UP r(std::max(a.size(), b.size()), FpElem(0, p));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UP up_mul(const UP& a, const UP& b, std::uint32_t p) {
    if (is_zero(a) || is_zero(b)) return {};
    UP r(a.size() + b.size() - 1, FpElem(0, p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void make_monic(UP& f) {
    if (is_zero(f)) return;
    FpElem inv = f.back().inverse();
    for (auto& c : f) c *= inv;
}

// remainder (and optional quotient) by a monic-or-not divisor
UP rem(UP a, const UP& b, std::uint32_t p, UP* quot = nullptr) {
    if (is_zero(b)) throw std::domain_error("univariate division by zero");
    UP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FpElem(0, p));
    FpElem binv = b.back().inverse();
    while (!is_zero(a) && a.size() >= b.size()) {
        FpElem c = a.back() * binv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (quot) {
        trim(q);
        *quot = q;
    }
    return a;
}

UP gcd(UP a, UP b, std::uint32_t p) {
    while (!is_zero(b)) {
        UP r = rem(a, b, p);
        a = b;
        b = r;
    }
    make_monic(a);
    return a;
}

UP mulmod(const UP& a, const UP& b, const UP& m, std::uint32_t p) {
    return rem(up_mul(a, b, p), m, p);
}

UP powmod(UP base, std::uint64_t e, const UP& m, std::uint32_t p) {
    UP acc = up_const(FpElem(1, p));
    base = rem(base, m, p);
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

UP derivative(const UP& f, std::uint32_t p) {
    UP r;
    for (std::size_t i = 1; i < f.size(); ++i) {
        FpElem c = f[i] * FpElem(i % p, p);
        r.push_back(c);
    }
    trim(r);
    return r;
}

UP pth_root(const UP& f, std::uint32_t p) {
    UP r;
    for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]); // c^(1/p) = c over F_p
    trim(r);
    return r;
}

UP exact_div(const UP& a, const UP& b, std::uint32_t p) {
    UP q;
    UP r = rem(a, b, p, &q);
    if (!is_zero(r)) throw std::logic_error("inexact univariate division");
    return q;
}

// squarefree decomposition in characteristic p
void squarefree(const UP& f0, std::uint32_t p, std::uint32_t mult,
                std::vector<std::pair<UP, std::uint32_t>>& out) {
    UP f = f0;
    make_monic(f);
    if (deg(f) == 0) return;
    UP fd = derivative(f, p);
    if (is_zero(fd)) {
        squarefree(pth_root(f, p), p, mult * p, out);
        return;
    }
    UP g = gcd(f, fd, p);
    UP w = exact_div(f, g, p);
    std::uint32_t i = 1;
    while (deg(w) > 0) {
        UP y = gcd(w, g, p);
        UP z = exact_div(w, y, p);
        if (deg(z) > 0) out.emplace_back(z, mult * i);
        w = y;
        g = exact_div(g, y, p);
        ++i;
    }
    if (deg(g) > 0) squarefree(pth_root(g, p), p, mult * p, out);
}

// distinct-degree: f squarefree monic -> list of (product, degree)
std::vector<std::pair<UP, std::size_t>> ddf(UP f, std::uint32_t p) {
    std::vector<std::pair<UP, std::size_t>> out;
    UP h = up_x(p); // x^(p^d) mod f, iterated
    std::size_t d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, p, f, p);
        UP g = gcd(up_sub(h, up_x(p), p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = exact_div(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

// Frobenius iterate a^(p^j) mod f via repeated p-th powers.
UP frob_iter(UP a, std::size_t j, const UP& f, std::uint32_t p) {
    for (std::size_t i = 0; i < j; ++i) a = powmod(a, p, f, p);
    return a;
}

// equal-degree splitting: f = product of irreducibles of degree d
void edf(const UP& f, std::size_t d, std::uint32_t p, std::mt19937_64& rng,
         std::vector<UP>& out) {
    if (deg(f) == d) {
        UP g = f;
        make_monic(g);
        out.push_back(g);
        return;
    }
    UP one = up_const(FpElem(1, p));
    for (;;) {
        UP a(deg(f), FpElem(0, p));
        for (auto& c : a) c = FpElem(rng() % p, p);
        trim(a);
        if (is_zero(a) || deg(a) == 0) continue;
        UP g = gcd(a, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(g, d, p, rng, out);
            edf(exact_div(f, g, p), d, p, rng, out);
            return;
        }
        UP t;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            t = a;
            UP cur = a;
            for (std::size_t i = 1; i < d; ++i) {
                cur = mulmod(cur, cur, f, p);
                t = up_add(t, cur, p);
            }
        } else {
            // a^((p^d-1)/2) = Norm(a)^((p-1)/2) with Norm via Frobenius orbit
            UP norm = a;
            UP cur = a;
            for (std::size_t i = 1; i < d; ++i) {
                cur = frob_iter(cur, 1, f, p);
                norm = mulmod(norm, cur, f, p);
            }
            t = up_sub(powmod(norm, (std::uint64_t(p) - 1) / 2, f, p), one, p);
        }
        g = gcd(t, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(g, d, p, rng, out);
            edf(exact_div(f, g, p), d, p, rng, out);
            return;
        }
    }
}

UP to_dense(const FpPoly& f, const std::string& var) {
    for (auto& v : f.vars_used())
        if (v != var)
            throw std::invalid_argument("factor_univariate: polynomial involves extra variable " + v);
    std::uint32_t p = f.modulus();
    UP out(f.deg_in(var) + 1, FpElem(0, p));
    auto view = f.univariate_view(var);
    for (std::size_t i = 0; i < view.size(); ++i) out[i] = view[i].constant_value();
    trim(out);
    return out;
}

FpPoly to_poly(const UP& f, const std::string& var, std::uint32_t p) {
    FpPoly out(p);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) out.insert_term(Monomial::var(var, i), f[i]);
    return out;
}

} // namespace

std::vector<UnivariateFactor> factor_univariate(const FpPoly& f, const std::string& var) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
    std::uint32_t p = f.modulus();
    UP dense = to_dense(f, var);
    std::vector<UnivariateFactor> result;
    if (deg(dense) == 0) return result;

    std::vector<std::pair<UP, std::uint32_t>> sqf;
    squarefree(dense, p, 1, sqf);

    std::mt19937_64 rng(0x52415946u); // fixed seed: reproducible splits
    for (auto& [part, mult] : sqf) {
        for (auto& [prod, d] : ddf(part, p)) {
            std::vector<UP> irr;
            edf(prod, d, p, rng, irr);
            for (auto& g : irr) result.push_back({to_poly(g, var, p), mult});
        }
    }
    std::sort(result.begin(), result.end(), [&](const UnivariateFactor& a, const UnivariateFactor& b) {
        auto da = a.factor.deg_in(var), db = b.factor.deg_in(var);
        if (da != db) return da < db;
        return a.factor.to_string() < b.factor.to_string();
    });
    return result;
}

std::vector<std::pair<FpElem, std::uint32_t>> rational_roots(const FpPoly& f,
                                                             const std::string& var) {
    std::vector<std::pair<FpElem, std::uint32_t>> out;
    std::uint32_t p = f.modulus();
    for (auto& fac : factor_univariate(f, var)) {
        if (fac.factor.deg_in(var) != 1) continue;
        auto view = fac.factor.univariate_view(var);
        FpElem a0 = view[0].constant_value();
        FpElem a1 = view[1].constant_value();
        out.emplace_back(-(a0 / a1), fac.multiplicity);
    }
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first.value() < b.first.value(); });
    (void)p;
    return out;
}

ExtField::ExtField(const FpPoly& modulus, const std::string& var) : p_(modulus.modulus()) {
    mod_ = to_dense(modulus, var);
    if (deg(mod_) == 0) throw std::invalid_argument("ExtField: constant modulus");
    make_monic(mod_);
}

ExtField::Elem ExtField::zero() const { return Elem(degree(), FpElem(0, p_)); }

ExtField::Elem ExtField::one() const {
    Elem e = zero();
    e[0] = FpElem(1, p_);
    return e;
}

ExtField::Elem ExtField::embed(const FpElem& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
}

ExtField::Elem ExtField::from_poly(const FpPoly& g) const {
    UP dense;
    if (g.is_constant()) {
        dense = up_const(g.constant_value());
    } else {
        auto vars = g.vars_used();
        dense = to_dense(g, vars[0]);
    }
    dense = rem(dense, mod_, p_);
    Elem e = zero();
    for (std::size_t i = 0; i < dense.size(); ++i) e[i] = dense[i];
    return e;
}

bool ExtField::is_zero(const Elem& a) const {
    for (auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    UP ua(a.begin(), a.end());
    UP ub(b.begin(), b.end());
    trim(ua);
    trim(ub);
    UP prod = mulmod(ua, ub, mod_, p_);
    Elem r = zero();
    for (std::size_t i = 0; i < prod.size(); ++i) r[i] = prod[i];
    return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    //  extended Euclid in F_p[t]
    UP r0 = mod_;
    UP r1(a.begin(), a.end());
    trim(r1);
    if (is_zero(r1)) throw std::domain_error("ExtField: inverse of zero");
    UP s0 = up_zero(), s1 = up_const(FpElem(1, p_));
    while (!is_zero(r1)) {
        UP q;
        UP r2 = rem(r0, r1, p_, &q);
        UP s2 = up_sub(s0, up_mul(q, s1, p_), p_);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (deg(r0) != 0) throw std::domain_error("ExtField: modulus not irreducible (zero divisor)");
    FpElem c = r0[0].inverse();
    UP invp = s0;
    for (auto& x : invp) x *= c;
    invp = rem(invp, mod_, p_);
    Elem r = zero();
    for (std::size_t i = 0; i < invp.size(); ++i) r[i] = invp[i];
    return r;
}

} // namespace raynaud
