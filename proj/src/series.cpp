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

#include "raynaud/series.hpp"

#include <sstream>
#include <stdexcept>

namespace raynaud {

namespace {
std::int64_t add_clamped(std::int64_t a, std::int64_t b) {
    if (a == LaurentSeries::EXACT || b == LaurentSeries::EXACT) return LaurentSeries::EXACT;
    return a + b;
}
} // namespace

LaurentSeries::LaurentSeries(std::string param, std::uint32_t p, std::int64_t prec)
    : param_(std::move(param)), p_(p), prec_(prec) {
    require_prime_modulus(p);
}

LaurentSeries LaurentSeries::zero(const std::string& param, std::uint32_t p, std::int64_t prec) {
    return LaurentSeries(param, p, prec);
}

LaurentSeries LaurentSeries::from_poly(const FpPoly& f, const std::string& param) {
    LaurentSeries s(param, f.modulus(), EXACT);
    std::uint32_t id = VarTable::id(param);
    for (auto& [m, c] : f.terms()) {
        if (m.entries().size() > 1 || (m.entries().size() == 1 && m.entries()[0].first != id))
            throw std::invalid_argument("from_poly: polynomial not univariate in " + param);
        s.c_.emplace(std::int64_t(m.deg_in(id)), c);
    }
    return s;
}

LaurentSeries LaurentSeries::monomial(const std::string& param, const FpElem& c,
                                      std::int64_t exp) {
    LaurentSeries s(param, c.modulus(), EXACT);
    if (!c.is_zero()) s.c_.emplace(exp, c);
    return s;
}

FpElem LaurentSeries::coeff(std::int64_t e) const {
    auto it = c_.find(e);
    return it == c_.end() ? FpElem(0, p_) : it->second;
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

std::int64_t LaurentSeries::valuation_lower_bound() const {
    if (c_.empty()) return prec_;
    return std::min(c_.begin()->first, prec_);
}

void LaurentSeries::set_coeff(std::int64_t e, const FpElem& c) {
    if (e >= prec_) return;
    if (c.is_zero())
        c_.erase(e);
    else
        c_[e] = c;
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
    if (param_ != o.param_ || p_ != o.p_)
        throw std::logic_error("series parameter/modulus mismatch");
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_compatible(o);
    LaurentSeries r(param_, p_, std::min(prec_, o.prec_));
    for (auto& [e, c] : c_)
        if (e < r.prec_) r.c_[e] = c;
    for (auto& [e, c] : o.c_) {
        if (e >= r.prec_) continue;
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
            r.c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(param_, p_, prec_);
    for (auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check_compatible(o);
    if (is_exact_zero() || o.is_exact_zero()) return LaurentSeries(param_, p_, EXACT);
    std::int64_t prec = std::min(add_clamped(prec_, o.valuation_lower_bound()),
                                 add_clamped(o.prec_, valuation_lower_bound()));
    LaurentSeries r(param_, p_, prec);
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) {
            std::int64_t e = e1 + e2;
            if (prec != EXACT && e >= prec) continue;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                r.c_.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    LaurentSeries r(param_, p_, add_clamped(prec_, k));
    for (auto& [e, c] : c_) r.c_.emplace(e + k, c);
    return r;
}

LaurentSeries LaurentSeries::truncated(std::int64_t T) const {
    LaurentSeries r(param_, p_, std::min(prec_, T));
    for (auto& [e, c] : c_)
        if (e < r.prec_) r.c_.emplace(e, c);
    return r;
}

LaurentSeries LaurentSeries::invert() const {
    auto v = valuation();
    if (!v)
        throw std::domain_error("invert: series is zero up to precision " +
                                (prec_ == EXACT ? std::string("EXACT") : std::to_string(prec_)));
    if (prec_ == EXACT && c_.size() > 1)
        throw std::domain_error("invert: exact multi-term series has no polynomial inverse; truncate first");
    FpElem lead = c_.begin()->second;
    // s = c y^v (1 + t); 1/s = c^{-1} y^{-v} sum (-t)^k
    LaurentSeries t = shifted(-*v) * monomial(param_, lead.inverse(), 0);
    t.c_.erase(0); // subtract the 1
    std::int64_t tprec = t.prec_;
    // after removing the unit term, t has valuation lower bound >= 1
    LaurentSeries acc = monomial(param_, FpElem(1, p_), 0).truncated(tprec);
    LaurentSeries term = acc;
    LaurentSeries neg_t = -t;
    for (;;) {
        term = term * neg_t;
        term = term.truncated(tprec);
        if (term.known_zero_to_precision()) break;
        acc = acc + term;
    }
    LaurentSeries r = acc.shifted(-*v) * monomial(param_, lead.inverse(), 0);
    return r;
}

LaurentSeries LaurentSeries::pow(std::uint64_t k) const {
    LaurentSeries acc = monomial(param_, FpElem(1, p_), 0);
    LaurentSeries base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r(param_, p_, prec_ == EXACT ? EXACT : prec_ - 1);
    for (auto& [e, c] : c_) {
        std::int64_t em = e % std::int64_t(p_);
        if (em < 0) em += p_;
        if (em == 0) continue;
        if (prec_ != EXACT && e - 1 >= r.prec_) continue;
        r.c_.emplace(e - 1, c * FpElem(std::uint64_t(em), p_));
    }
    return r;
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t shown = 0;
    bool first = true;
    for (auto& [e, c] : c_) {
        if (shown++ == max_terms) {
            os << " + ...";
            break;
        }
        if (!first) os << " + ";
        first = false;
        os << c.value() << "*" << param_ << "^" << e;
    }
    if (first) os << "0";
    if (prec_ != EXACT) os << " + O(" << param_ << "^" << prec_ << ")";
    return os.str();
}

LaurentSeries eval_poly_at_series(const FpPoly& f, const std::string& xvar,
                                  const LaurentSeries& s, const std::string& yvar) {
    if (s.param() != yvar)
        throw std::invalid_argument("eval_poly_at_series: series parameter is " + s.param() +
                                    ", expected " + yvar);
    std::uint32_t p = f.modulus();
    auto coeffs = f.univariate_view(xvar); // polys in yvar
    LaurentSeries r = LaurentSeries::from_poly(FpPoly::zero(p), yvar);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        LaurentSeries c = LaurentSeries::from_poly(coeffs[i], yvar);
        r = r * s + c;
    }
    return r;
}

LaurentSeries eval_rational_at_series(const FpRational& g, const std::string& xvar,
                                      const LaurentSeries& s, const std::string& yvar) {
    LaurentSeries num = eval_poly_at_series(g.num(), xvar, s, yvar);
    LaurentSeries den = eval_poly_at_series(g.den(), xvar, s, yvar);
    return num * den.invert();
}

} // namespace raynaud
