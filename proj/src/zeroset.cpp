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

#include "raynaud/zeroset.hpp"

#include <algorithm>
#include <sstream>

#include "raynaud/factor.hpp"

namespace raynaud {

namespace {

struct Context {
    int t_max;
    std::vector<std::pair<std::string, std::string>> fixed; // var -> value description
    std::string prefix() const {
        std::ostringstream os;
        for (auto& [v, d] : fixed) os << v << "=" << d << ", ";
        return os.str();
    }
};

ZeroSetResult solve(std::vector<FpPoly> S, std::vector<std::string> vars, Context ctx);

// All polynomials univariate in `var` (or constant): decide by gcd chain.
ZeroSetResult solve_univariate(const std::vector<FpPoly>& S, const std::string& var,
                               const Context& ctx) {
    FpPoly g = S.front();
    for (std::size_t i = 1; i < S.size(); ++i) g = gcd_univariate(g, S[i], var);
    if (g.is_constant() && !g.is_zero())
        return {ZeroSetKind::Empty, ""};
    // nonconstant gcd: roots exist over the closure; describe one
    auto roots = rational_roots(g, var);
    std::ostringstream os;
    if (!roots.empty()) {
        os << ctx.prefix() << var << "=" << roots.front().first.value();
    } else {
        auto facs = factor_univariate(g, var);
        os << ctx.prefix() << var << " a root of " << facs.front().factor.to_string()
           << " (degree " << facs.front().factor.deg_in(var) << ")";
    }
    return {ZeroSetKind::NonEmpty, os.str()};
}

// gcd of mapped polynomials in K[v], K = F_p[u]/(phi); nullptr-like states:
// returns pair(all_zero, gcd_dense) where gcd is monic.
std::pair<bool, std::vector<ExtField::Elem>> ext_gcd_system(const std::vector<FpPoly>& S,
                                                            const std::string& v,
                                                            const ExtField& K) {
    using EP = std::vector<ExtField::Elem>; // dense in v over K
    auto trim = [&](EP& f) { while (!f.empty() && K.is_zero(f.back())) f.pop_back(); };
    auto to_ep = [&](const FpPoly& f) {
        EP out;
        auto view = f.univariate_view(v); // coefficients are polys in u
        for (auto& c : view) out.push_back(K.from_poly(c));
        trim(out);
        return out;
    };
    auto rem = [&](EP a, const EP& b) {
        ExtField::Elem binv = K.inv(b.back());
        while (a.size() >= b.size()) {
            ExtField::Elem c = K.mul(a.back(), binv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = K.sub(a[shift + i], K.mul(c, b[i]));
            trim(a);
            if (a.size() < b.size()) break;
        }
        return a;
    };
    EP g;
    bool any = false;
    for (auto& f : S) {
        EP e = to_ep(f);
        if (e.empty()) continue; // vanishes identically at this candidate
        if (!any) {
            g = e;
            any = true;
            continue;
        }
        // gcd(g, e)
        EP a = g, b = e;
        while (!b.empty()) {
            EP r = rem(a, b);
            a = b;
            b = r;
        }
        g = a;
        if (g.size() == 1) break; // constant already
    }
    return {!any, g};
}

ZeroSetResult solve(std::vector<FpPoly> S, std::vector<std::string> vars, Context ctx) {
    std::uint32_t p = S.empty() ? 2 : S.front().modulus();
    // drop identically-zero constraints
    S.erase(std::remove_if(S.begin(), S.end(), [](const FpPoly& f) { return f.is_zero(); }),
            S.end());
    for (auto& f : S)
        if (f.is_constant() && !f.constant_value().is_zero()) return {ZeroSetKind::Empty, ""};
    if (S.empty())
        return {ZeroSetKind::NonEmpty, ctx.prefix() + "every point (no remaining constraint)"};

    // which variables actually occur
    std::vector<std::string> used;
    for (auto& var : vars)
        for (auto& f : S)
            if (f.involves(var)) {
                used.push_back(var);
                break;
            }
    if (used.empty()) return {ZeroSetKind::Empty, ""}; // nonzero constants only (handled above)
    if (used.size() == 1) return solve_univariate(S, used[0], ctx);

    const std::string u = used[0], v = used[1];

    // monomial case split: c*u^a*v^b = 0 forces u=0 or v=0
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i].term_count() != 1) continue;
        auto [m, c] = S[i].leading_term();
        std::uint64_t au = m.deg_in(VarTable::id(u)), av = m.deg_in(VarTable::id(v));
        if (au + av == 0) continue;
        std::vector<FpPoly> rest;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (j != i) rest.push_back(S[j]);
        ZeroSetKind agg = ZeroSetKind::Empty;
        std::string wit, unknown_wit;
        for (auto& branch : {u, v}) {
            if ((branch == u && au == 0) || (branch == v && av == 0)) continue;
            std::vector<FpPoly> sub;
            for (auto& f : rest) sub.push_back(f.substitute(branch, FpElem(0, p)));
            Context c2 = ctx;
            c2.fixed.emplace_back(branch, "0");
            ZeroSetResult r = solve(sub, vars, c2);
            if (r.kind == ZeroSetKind::NonEmpty) return r;
            if (r.kind == ZeroSetKind::Unknown) {
                agg = ZeroSetKind::Unknown;
                unknown_wit = r.witness;
            }
            (void)wit;
        }
        return {agg, agg == ZeroSetKind::Unknown ? unknown_wit : ""};
    }

    // resultant elimination of v
    std::vector<FpPoly> u_only, with_v;
    for (auto& f : S) {
        if (f.involves(v)) with_v.push_back(f);
        else u_only.push_back(f);
    }
    std::vector<FpPoly> R = u_only;
    if (!with_v.empty()) {
        // eliminate against the element of smallest v-degree
        std::size_t pick = 0;
        for (std::size_t i = 1; i < with_v.size(); ++i)
            if (with_v[i].deg_in(v) < with_v[pick].deg_in(v)) pick = i;
        const FpPoly& f0 = with_v[pick];
        for (std::size_t i = 0; i < with_v.size(); ++i) {
            if (i == pick) continue;
            FpPoly res = resultant(f0, with_v[i], v);
            if (res.is_zero())
                return {ZeroSetKind::Unknown,
                        ctx.prefix() + "resultant degeneration (shared factor in " + v + ")"};
            R.push_back(res);
        }
        if (with_v.size() == 1 && R.empty()) {
            // a single nonconstant polynomial always has zeros over the closure
            return {ZeroSetKind::NonEmpty,
                    ctx.prefix() + "curve " + f0.to_string() + " = 0 (positive-dimensional)"};
        }
        if (with_v.size() == 1) {
            // no second v-polynomial: candidates come from u_only alone, f0 constrains v
        }
    }
    // gcd of the u-candidates
    FpPoly H = R.front();
    for (std::size_t i = 1; i < R.size(); ++i) H = gcd_univariate(H, R[i], u);
    if (H.is_zero())
        return {ZeroSetKind::Unknown, ctx.prefix() + "resultant degeneration (zero eliminant)"};
    if (H.is_constant()) return {ZeroSetKind::Empty, ""};
    if (H.deg_in(u) > 600)
        return {ZeroSetKind::Unknown,
                ctx.prefix() + "eliminant degree " + std::to_string(H.deg_in(u)) +
                    " beyond desk-scale candidate analysis"};

    bool unresolved = false;
    std::string unresolved_wit;
    for (auto& fac : factor_univariate(H, u)) {
        std::uint64_t t = fac.factor.deg_in(u);
        if (t > std::uint64_t(std::max(ctx.t_max, 0))) {
            unresolved = true;
            std::ostringstream os;
            os << ctx.prefix() << "candidate " << u << " in extension of degree " << t
               << " > t_max=" << ctx.t_max << " left unresolved (" << fac.factor.to_string()
               << ")";
            unresolved_wit = os.str();
            continue;
        }
        ExtField K(fac.factor, u);
        auto [all_zero, g] = ext_gcd_system(S, v, K);
        if (all_zero) {
            std::ostringstream os;
            os << ctx.prefix() << "entire line " << u << " root of " << fac.factor.to_string();
            return {ZeroSetKind::NonEmpty, os.str()};
        }
        if (g.size() >= 2) {
            std::ostringstream os;
            if (t == 1) {
                auto roots = rational_roots(fac.factor, u);
                os << ctx.prefix() << u << "=" << roots.front().first.value() << ", " << v
                   << " a root of degree-" << (g.size() - 1) << " gcd";
            } else {
                os << ctx.prefix() << u << " a root of " << fac.factor.to_string() << " (degree "
                   << t << "), " << v << " a root of degree-" << (g.size() - 1) << " gcd over that extension";
            }
            return {ZeroSetKind::NonEmpty, os.str()};
        }
        // g constant nonzero: candidate excluded
    }
    if (unresolved) return {ZeroSetKind::Unknown, unresolved_wit};
    return {ZeroSetKind::Empty, ""};
}

} // namespace

ZeroSetResult common_zero_set(const std::vector<FpPoly>& system,
                              const std::vector<std::string>& vars, int t_max) {
    if (vars.size() > 2)
        throw std::invalid_argument("common_zero_set supports at most two variables");
    Context ctx;
    ctx.t_max = t_max;
    return solve(system, vars, ctx);
}

} // namespace raynaud
