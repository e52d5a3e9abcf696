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

#include "raynaud/rational.hpp"

namespace raynaud {

namespace {

// Largest monomial dividing every term.
Monomial common_monomial(const FpPoly& f) {
    Monomial g;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        if (first) {
            g = m;
            first = false;
            continue;
        }
        Monomial next;
        std::size_t i = 0, j = 0;
        auto& a = g.entries();
        auto& b = m.entries();
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) ++i;
            else if (b[j].first < a[i].first) ++j;
            else {
                next.entries().emplace_back(a[i].first, std::min(a[i].second, b[j].second));
                ++i, ++j;
            }
        }
        g = next;
        if (g.is_unit()) break;
    }
    return g;
}

} // namespace

FpRational::FpRational(const FpPoly& num)
    : num_(num), den_(FpPoly::constant(1, num.modulus())) {}

FpRational::FpRational(const FpPoly& num, const FpPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void FpRational::reduce() {
    if (num_.is_zero()) {
        den_ = FpPoly::constant(1, den_.modulus());
        return;
    }
    // shared monomial content
    Monomial mn = common_monomial(num_);
    Monomial md = common_monomial(den_);
    Monomial shared;
    {
        std::size_t i = 0, j = 0;
        auto& a = mn.entries();
        auto& b = md.entries();
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) ++i;
            else if (b[j].first < a[i].first) ++j;
            else {
                shared.entries().emplace_back(a[i].first, std::min(a[i].second, b[j].second));
                ++i, ++j;
            }
        }
    }
    if (!shared.is_unit()) {
        FpPoly n(num_.modulus()), d(den_.modulus());
        for (auto& [m, c] : num_.terms()) n.insert_term(*m.divide(shared), c);
        for (auto& [m, c] : den_.terms()) d.insert_term(*m.divide(shared), c);
        num_ = n;
        den_ = d;
    }
    // univariate gcd when both sides live in one shared variable
    auto vn = num_.vars_used();
    auto vd = den_.vars_used();
    if (vn.size() <= 1 && vd.size() <= 1 && !den_.is_constant()) {
        std::string var = vd.empty() ? (vn.empty() ? "" : vn[0]) : vd[0];
        if (!var.empty() && (vn.empty() || vn[0] == var) && (vd.empty() || vd[0] == var)) {
            FpPoly g = gcd_univariate(num_, den_, var);
            if (!g.is_constant()) {
                num_ = *divide_exact(num_, g);
                den_ = *divide_exact(den_, g);
            }
        }
    }
    // normalize so den has leading coefficient 1
    auto [lm, lc] = den_.leading_term();
    if (!lc.is_one()) {
        FpElem inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

FpRational FpRational::operator+(const FpRational& o) const {
    return FpRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FpRational FpRational::operator-(const FpRational& o) const { return *this + (-o); }

FpRational FpRational::operator-() const {
    FpRational r = *this;
    r.num_ = -r.num_;
    return r;
}

FpRational FpRational::operator*(const FpRational& o) const {
    return FpRational(num_ * o.num_, den_ * o.den_);
}

FpRational FpRational::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    return FpRational(den_, num_);
}

FpRational FpRational::operator/(const FpRational& o) const { return *this * o.inverse(); }

FpRational FpRational::pow(std::uint64_t k) const {
    return FpRational(num_.pow(k), den_.pow(k));
}

bool FpRational::operator==(const FpRational& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

FpRational FpRational::derivative(const std::string& var) const {
    FpPoly dn = num_.derivative_opt(var);
    FpPoly dd = den_.derivative_opt(var);
    return FpRational(dn * den_ - num_ * dd, den_ * den_);
}

std::string FpRational::to_string() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace raynaud
