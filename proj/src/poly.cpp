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

#include "raynaud/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace raynaud {

namespace {
std::mutex g_var_mutex;
std::vector<std::string>& var_names() {
    static std::vector<std::string> names;
    return names;
}
std::unordered_map<std::string, std::uint32_t>& var_ids() {
    static std::unordered_map<std::string, std::uint32_t> ids;
    return ids;
}
} // namespace

std::uint32_t VarTable::id(const std::string& name) {
    std::lock_guard<std::mutex> lock(g_var_mutex);
    auto it = var_ids().find(name);
    if (it != var_ids().end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(var_names().size());
    var_names().push_back(name);
    var_ids().emplace(name, id);
    return id;
}

const std::string& VarTable::name(std::uint32_t id) {
    std::lock_guard<std::mutex> lock(g_var_mutex);
    return var_names().at(id);
}

Monomial Monomial::var(const std::string& name, std::uint64_t exp) {
    Monomial m;
    if (exp > 0) m.e_.emplace_back(VarTable::id(name), exp);
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto& [v, e] : e_) d += e;
    return d;
}

std::uint64_t Monomial::deg_in(std::uint32_t var_id) const {
    for (auto& [v, e] : e_)
        if (v == var_id) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
            r.e_.push_back(e_[i++]);
        else if (i == e_.size() || o.e_[j].first < e_[i].first)
            r.e_.push_back(o.e_[j++]);
        else {
            r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
            ++i, ++j;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
            r.e_.push_back(e_[i++]);
        else if (i == e_.size() || o.e_[j].first < e_[i].first)
            return std::nullopt;
        else {
            if (e_[i].second < o.e_[j].second) return std::nullopt;
            if (e_[i].second > o.e_[j].second)
                r.e_.emplace_back(e_[i].first, e_[i].second - o.e_[j].second);
            ++i, ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_ = e_;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: lexicographic with smaller variable ids more significant;
    // bigger exponent on an earlier variable means a bigger monomial.
    auto& ea = a.entries();
    auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first)
            // The one holding the earlier variable has positive exponent there.
            return ea[i].first > eb[j].first;
        if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
        ++i, ++j;
    }
    return i == ea.size() && j != eb.size();
}

FpPoly::FpPoly(std::uint32_t p) : p_(p) { require_prime_modulus(p); }

FpPoly FpPoly::constant(const FpElem& c) {
    FpPoly f(c.modulus());
    if (!c.is_zero()) f.terms_.emplace(Monomial{}, c);
    return f;
}

FpPoly FpPoly::variable(const std::string& name, std::uint32_t p) {
    FpPoly f(p);
    f.terms_.emplace(Monomial::var(name), FpElem(1, p));
    return f;
}

FpPoly FpPoly::term(const FpElem& c, const Monomial& m) {
    FpPoly f(c.modulus());
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
}

bool FpPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

FpElem FpPoly::constant_value() const {
    if (terms_.empty()) return FpElem(0, p_);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::uint64_t FpPoly::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.degree();
}

std::uint64_t FpPoly::deg_in(const std::string& var) const {
    std::uint32_t id = VarTable::id(var);
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.deg_in(id));
    return d;
}

std::vector<std::string> FpPoly::vars_used() const {
    std::vector<std::uint32_t> ids;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.entries()) ids.push_back(v);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::string> out;
    for (auto v : ids) out.push_back(VarTable::name(v));
    return out;
}

FpElem FpPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FpElem(0, p_) : it->second;
}

std::pair<Monomial, FpElem> FpPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void FpPoly::insert_term(const Monomial& m, const FpElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    if (p_ != o.p_) throw std::logic_error("mixed moduli in polynomial arithmetic");
    FpPoly r = *this;
    for (auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(p_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (p_ != o.p_) throw std::logic_error("mixed moduli in polynomial arithmetic");
    FpPoly r(p_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.insert_term(m1 * m2, c1 * c2);
    return r;
}

FpPoly FpPoly::operator*(const FpElem& c) const {
    FpPoly r(p_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

FpPoly FpPoly::times_term(const FpElem& c, const Monomial& m) const {
    FpPoly r(p_);
    if (c.is_zero()) return r;
    for (auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

FpPoly FpPoly::pow(std::uint64_t k) const {
    FpPoly acc = constant(FpElem(1, p_));
    FpPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

FpPoly FpPoly::derivative(const std::string& var) const {
    if (!is_zero() && !involves(var)) {
        auto used = vars_used();
        if (std::find(used.begin(), used.end(), var) == used.end())
            throw std::invalid_argument("derivative: unknown variable " + var);
    }
    return derivative_opt(var);
}

FpPoly FpPoly::derivative_opt(const std::string& var) const {
    std::uint32_t id = VarTable::id(var);
    FpPoly r(p_);
    for (auto& [m, c] : terms_) {
        std::uint64_t e = m.deg_in(id);
        if (e == 0 || e % p_ == 0) continue; // char-p rule: p | e kills the term
        FpElem nc = c * FpElem(e % p_, p_);
        Monomial nm = *m.divide(Monomial::var(var, 1));
        r.insert_term(nm, nc);
    }
    return r;
}

FpPoly FpPoly::frobenius_power(std::uint32_t k) const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p_;
    FpPoly r(p_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m.pow(q), c); // c^(p^k) = c over F_p
    return r;
}

std::optional<FpPoly> FpPoly::p_th_root() const {
    FpPoly r(p_);
    for (auto& [m, c] : terms_) {
        Monomial nm = m;
        for (auto& [v, e] : nm.entries()) {
            if (e % p_ != 0) return std::nullopt;
            e /= p_;
        }
        r.terms_.emplace(nm, c);
    }
    return r;
}

FpPoly FpPoly::substitute(const std::string& var, const FpPoly& value) const {
    std::uint32_t id = VarTable::id(var);
    FpPoly r(p_);
    // Cache powers of the substituted value.
    std::map<std::uint64_t, FpPoly> powers;
    powers.emplace(0, constant(FpElem(1, p_)));
    auto power = [&](std::uint64_t e) -> const FpPoly& {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        auto prev = powers.lower_bound(e);
        --prev;
        FpPoly acc = prev->second;
        for (std::uint64_t i = prev->first; i < e; ++i) acc = acc * value;
        return powers.emplace(e, std::move(acc)).first->second;
    };
    for (auto& [m, c] : terms_) {
        std::uint64_t e = m.deg_in(id);
        Monomial rest;
        for (auto& [v, k] : m.entries())
            if (v != id) rest.entries().emplace_back(v, k);
        if (e == 0) {
            r.insert_term(rest, c);
        } else {
            FpPoly contrib = power(e).times_term(c, rest);
            r += contrib;
        }
    }
    return r;
}

FpPoly FpPoly::substitute(const std::string& var, const FpElem& value) const {
    return substitute(var, constant(value));
}

std::vector<FpPoly> FpPoly::univariate_view(const std::string& var) const {
    std::uint32_t id = VarTable::id(var);
    std::vector<FpPoly> coeffs(deg_in(var) + 1, FpPoly(p_));
    for (auto& [m, c] : terms_) {
        std::uint64_t e = m.deg_in(id);
        Monomial rest;
        for (auto& [v, k] : m.entries())
            if (v != id) rest.entries().emplace_back(v, k);
        coeffs[e].insert_term(rest, c);
    }
    return coeffs;
}

FpPoly FpPoly::from_univariate(const std::string& var, const std::vector<FpPoly>& coeffs,
                               std::uint32_t p) {
    FpPoly r(p);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        r += coeffs[e].times_term(FpElem(1, p), Monomial::var(var, e));
    }
    return r;
}

namespace {

// Printing uses an id-independent canonical order so text output is stable
// across processes: total degree desc, then name-sorted exponent lists.
struct PrintKey {
    std::uint64_t degree;
    std::vector<std::pair<std::string, std::uint64_t>> exps;
};

PrintKey print_key(const Monomial& m) {
    PrintKey k;
    k.degree = m.degree();
    for (auto& [v, e] : m.entries()) k.exps.emplace_back(VarTable::name(v), e);
    std::sort(k.exps.begin(), k.exps.end());
    return k;
}

bool print_before(const PrintKey& a, const PrintKey& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.exps < b.exps;
}

} // namespace

std::string FpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<PrintKey, FpElem>> items;
    for (auto& [m, c] : terms_) items.emplace_back(print_key(m), c);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : items) {
        if (!first) os << "+";
        first = false;
        os << c.value();
        for (auto& [name, e] : k.exps) {
            os << "*" << name;
            if (e >= 2) os << "^" << e;
        }
    }
    return os.str();
}

FpPoly FpPoly::parse(const std::string& text, std::uint32_t p) {
    FpPoly r(p);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    while (i < text.size()) {
        skip_ws();
        // one term: [coef] [* var [^exp]]*  or bare var-product
        FpElem coef(1, p);
        bool saw_any = false;
        Monomial mono;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > (1ull << 62)) throw std::invalid_argument("coefficient too large");
                ++i;
            }
            coef = FpElem(v, p);
            saw_any = true;
        }
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            } else if (saw_any && i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
                // permissive: allow juxtaposition without '*'
            } else if (!saw_any && i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
                // leading variable with implicit coefficient 1
            } else {
                break;
            }
            if (i == text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected variable name in polynomial text");
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                name += text[i];
                ++i;
            }
            std::uint64_t exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("expected exponent in polynomial text");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp = exp * 10 + (text[i++] - '0');
            }
            mono = mono * Monomial::var(name, exp);
            saw_any = true;
        }
        if (!saw_any) throw std::invalid_argument("malformed term in polynomial text");
        r.insert_term(mono, coef);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '+')
            throw std::invalid_argument(std::string("unexpected character '") + text[i] +
                                        "' in polynomial text");
        ++i;
    }
    return r;
}

// ---- division, gcd, resultant ----

std::optional<FpPoly> divide_exact(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    FpPoly rem = a;
    FpPoly quot(a.modulus());
    auto [lm, lc] = b.leading_term();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term();
        auto q = rm.divide(lm);
        if (!q) return std::nullopt;
        FpElem qc = rc / lc;
        quot.insert_term(*q, qc);
        rem -= b.times_term(qc, *q);
    }
    return quot;
}

FpPoly nf_mod(const FpPoly& g, const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("normal form modulo zero polynomial");
    auto [lm, lc] = f.leading_term();
    FpPoly work = g;
    FpPoly out(g.modulus());
    while (!work.is_zero()) {
        auto [wm, wc] = work.leading_term();
        auto q = wm.divide(lm);
        if (q) {
            work -= f.times_term(wc / lc, *q);
        } else {
            out.insert_term(wm, wc);
            // move the leading term out of the working polynomial
            FpPoly lead = FpPoly::term(wc, wm);
            work -= lead;
        }
    }
    return out;
}

FpPoly gcd_univariate(const FpPoly& f, const FpPoly& g, const std::string& var) {
    auto check_univ = [&](const FpPoly& h) {
        for (auto& v : h.vars_used())
            if (v != var) throw std::invalid_argument("gcd_univariate: polynomial involves " + v);
    };
    check_univ(f);
    check_univ(g);
    FpPoly a = f, b = g;
    while (!b.is_zero()) {
        // remainder of a by b in F_p[var]
        std::uint64_t db = b.deg_in(var);
        FpElem blc = b.univariate_view(var)[db].constant_value();
        FpPoly r = a;
        while (!r.is_zero() && r.deg_in(var) >= db && !(r.is_constant() && db > 0)) {
            std::uint64_t dr = r.deg_in(var);
            if (dr < db) break;
            FpElem rlc = r.univariate_view(var)[dr].constant_value();
            FpPoly t = b.times_term(rlc / blc, Monomial::var(var, dr - db));
            r -= t;
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // make monic
    std::uint64_t da = a.deg_in(var);
    FpElem alc = a.univariate_view(var)[da].constant_value();
    return a * alc.inverse();
}

namespace {

// Pseudo-remainder: lc(B)^(da-db+1) * A  mod B, viewed univariately in var.
FpPoly pseudo_rem(const FpPoly& A, const FpPoly& B, const std::string& var) {
    std::uint32_t p = A.modulus();
    std::uint64_t db = B.deg_in(var);
    std::vector<FpPoly> bc = B.univariate_view(var);
    const FpPoly& blc = bc[db];
    FpPoly r = A;
    std::uint64_t da = A.deg_in(var);
    if (da < db) return r;
    std::int64_t steps = std::int64_t(da - db) + 1;
    while (!r.is_zero() && r.deg_in(var) >= db) {
        std::uint64_t dr = r.deg_in(var);
        std::vector<FpPoly> rc = r.univariate_view(var);
        FpPoly rlc = rc[dr];
        r = r * blc - B * rlc.times_term(FpElem(1, p), Monomial::var(var, dr - db));
        --steps;
    }
    // multiply by remaining powers of blc so the full factor lc(B)^(da-db+1) is applied
    for (std::int64_t i = 0; i < steps; ++i) r = r * blc;
    return r;
}

} // namespace

FpPoly resultant(const FpPoly& f, const FpPoly& g, const std::string& var) {
    std::uint32_t p = f.modulus();
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    std::uint64_t df = f.deg_in(var), dg = g.deg_in(var);
    if (df == 0 && dg == 0) return FpPoly::constant(FpElem(1, p));
    if (df == 0) return f.pow(dg); // Res(c, g) = c^(deg g)
    if (dg == 0) return g.pow(df);

    FpPoly A = f, B = g;
    bool negate = false;
    if (A.deg_in(var) < B.deg_in(var)) {
        std::swap(A, B);
        if ((df * dg) % 2 == 1) negate = true;
    }
    int sign = 1;
    FpPoly gcoef = FpPoly::constant(FpElem(1, p));
    FpPoly h = FpPoly::constant(FpElem(1, p));
    for (;;) {
        std::uint64_t da = A.deg_in(var), db = B.deg_in(var);
        std::uint64_t delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
        FpPoly R = pseudo_rem(A, B, var);
        A = B;
        if (R.is_zero()) {
            // common factor of positive degree: resultant vanishes
            return FpPoly::zero(p);
        }
        // B = R / (g * h^delta), exact by subresultant theory
        FpPoly denom = gcoef * h.pow(delta);
        auto q = divide_exact(R, denom);
        if (!q) throw std::logic_error("subresultant PRS: inexact division");
        B = *q;
        gcoef = A.univariate_view(var)[A.deg_in(var)];
        if (delta >= 1) {
            auto hq = divide_exact(gcoef.pow(delta), h.pow(delta - 1));
            if (!hq) throw std::logic_error("subresultant PRS: inexact h update");
            h = *hq;
        }
        if (B.deg_in(var) == 0) {
            std::uint64_t dA = A.deg_in(var);
            // standard tail: h <- lc(B)^dA / h^(dA-1)
            FpPoly res(p);
            if (dA >= 1) {
                auto rq = divide_exact(B.pow(dA), h.pow(dA - 1));
                if (!rq) throw std::logic_error("subresultant PRS: inexact tail");
                res = *rq;
            } else {
                res = h;
            }
            if (sign < 0) res = -res;
            if (negate) res = -res;
            return res;
        }
    }
}

} // namespace raynaud
