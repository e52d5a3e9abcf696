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

#include "raynaud/tango.hpp"

#include <algorithm>
#include <sstream>

#include "raynaud/linalg.hpp"

namespace raynaud {

namespace {

constexpr std::int64_t kPrecisionCap = 1 << 16;

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

void claim_bool(CertCheck& ck, bool value) {
    claim_int(ck, "eq", value ? 1 : 0, 1);
}

/// Cleared differential residual of g on the chart: zero mod f iff dg = 0 on
/// the curve. Throws when the denominator vanishes on the curve.
FpPoly dg_residual_on_chart(const FpRational& g, const Chart& chart) {
    const FpPoly& f = chart.f;
    const FpPoly& u = g.num();
    const FpPoly& v = g.den();
    if (nf_mod(v, f).is_zero())
        throw std::domain_error("denominator vanishes identically on the curve");
    FpPoly fu = f.derivative_opt(chart.u);
    FpPoly fv = f.derivative_opt(chart.v);
    FpPoly gu_num = u.derivative_opt(chart.u) * v - u * v.derivative_opt(chart.u);
    FpPoly gv_num = u.derivative_opt(chart.v) * v - u * v.derivative_opt(chart.v);
    return nf_mod(gu_num * fv - gv_num * fu, f);
}

bool smooth_checks_pass(const Certificate& cert) {
    bool saw = false;
    for (auto& c : cert.checks) {
        if (c.id.rfind("smooth.", 0) == 0) {
            saw = true;
            if (c.status != Status::Pass) return false;
        }
    }
    return saw;
}

TangoDatum build_datum_with_checks(PlaneCurveFamily C, std::uint32_t level,
                                   std::optional<TransitionSpec> declared,
                                   std::int64_t precision_override) {
    std::uint32_t p = C.p();
    std::int64_t d = std::int64_t(C.curve_degree());
    std::int64_t degD = std::int64_t(C.e()) * (d - 3);
    if (d <= 3)
        throw std::invalid_argument("deg D <= 0, not a Tango datum (curve degree " +
                                    std::to_string(d) + " <= 3)");
    if (d > (1 << 20))
        throw std::invalid_argument("parameters beyond desk scale: curve degree too large");
    std::uint64_t q = ipow(p, level);
    if (std::uint64_t(d) != q * C.e())
        throw std::invalid_argument("curve degree must equal p^n e for Tango data");

    Certificate cert;
    cert.family["p"] = p;
    cert.family["n"] = level;
    cert.family["e"] = C.e();
    cert.family["equation"] = C.equation().to_string();
    cert.family["D"] = std::to_string(degD) + "*inf";

    Certificate smooth = smoothness_certify(C);
    cert.merge("", smooth);

    // Line section at X = 0: the chart pair (U1, U2) covers the curve with U1
    // missing exactly inf.
    {
        auto pts = line_intersection_at_X0(C);
        CertCheck& ck = cert.add("cover.line-x0", Status::Pass,
                                 "curve meets X=0 exactly at inf with multiplicity p^n e");
        Json arr = Json::array();
        for (auto& lp : pts)
            arr.push_back(lp.point.to_string() + "^" + std::to_string(lp.multiplicity));
        ck.witness["intersection"] = arr;
        bool single_inf = pts.size() == 1 && pts[0].point == PointId::infinity() &&
                          pts[0].multiplicity == std::uint64_t(d);
        claim_bool(ck, single_inf);
    }

    std::int64_t genus2m2 = 0;
    bool smooth_ok = smooth_checks_pass(cert);
    if (smooth_ok) {
        std::int64_t g = std::int64_t(genus(C, smooth));
        genus2m2 = 2 * g - 2;
        CertCheck& ck = cert.add("genus", Status::Pass,
                                 "smooth plane curve genus (d-1)(d-2)/2 with 2g-2 = d(d-3)");
        ck.witness["genus"] = g;
        claim_int(ck, "eq", genus2m2, d * (d - 3));
    } else {
        cert.add("genus", Status::Inconclusive, "genus needs a passing smoothness certificate");
    }

    // dz1 must generate the differentials on all of U1, so (dz1) is supported
    // at inf alone.
    Chart u1 = C.chart_u1();
    Certificate omega = generates_omega_on_chart(C, u1, "z1");
    cert.merge("condition1.omega-u1", omega);

    // Informational: dy generates near inf on a shrunk U2 (local parameter y).
    Chart u2 = C.chart_u2();
    Certificate omega2 = generates_omega_on_chart(C, u2, "y");
    cert.merge("condition1.omega-u2", omega2);

    // Branch series and the valuation checks, raising precision on
    // Indeterminate up to the cap.
    std::int64_t T = precision_override > 0 ? precision_override
                                            : std::max<std::int64_t>(C.default_precision(), d + 2);
    FpRational z1(FpPoly::constant(1, p), FpPoly::variable("x", p));
    LaurentSeries branch = expand_at_infinity(C, T);
    std::optional<std::int64_t> vx, dv;
    for (;;) {
        vx = valuation_at_infinity(FpRational(FpPoly::variable("x", p)), branch);
        dv = differential_valuation_at_infinity(z1, branch);
        if ((vx && dv) || T >= kPrecisionCap) break;
        T = std::min<std::int64_t>(2 * T, kPrecisionCap);
        branch = expand_at_infinity(C, T);
    }
    {
        CertCheck& ck = cert.add("condition1.valuation-x",
                                 vx ? Status::Pass : Status::Inconclusive,
                                 "v_inf(x) = p^n e (ideal (x) = (y^{p^n e}) at inf)");
        ck.witness["precision"] = T;
        if (vx) claim_int(ck, "eq", *vx, d);
        else ck.witness["note"] = "series zero up to precision cap";
    }
    {
        CertCheck& ck = cert.add("condition1.differential-valuation",
                                 dv ? Status::Pass : Status::Inconclusive,
                                 "v_inf(dz1) = p^n deg D, all of (dz1) at inf");
        ck.witness["precision"] = T;
        if (dv) claim_int(ck, "eq", *dv, std::int64_t(q) * degD);
        else ck.witness["note"] = "derivative series zero up to precision cap";
    }
    if (smooth_ok) {
        CertCheck& ck = cert.add("condition1.degree-identity", Status::Pass,
                                 "p^n deg D = 2g - 2 (omega_C = L^{p^n} at degree level)");
        claim_int(ck, "eq", std::int64_t(q) * degD, genus2m2);
    }
    {
        FpPoly residual = dg_residual_on_chart(z1, u2);
        CertCheck& ck = cert.add("condition1.not-pth-power", Status::Pass,
                                 "z1 not in K(C)^p: dz1 does not vanish on the curve");
        ck.witness["dg_residual"] = residual.to_string();
        claim_bool(ck, !residual.is_zero());
    }

    cert.conclusion = "condition (1): (dz1) = p^n D with D = " + std::to_string(degD) +
                      "*inf, deg D > 0";

    TangoDatum datum{std::move(C), z1, level, DivisorOnC::infinity_times(degD),
                     "O(" + std::to_string(degD) + "*inf)", std::move(cert), std::move(branch),
                     std::move(declared)};
    return datum;
}

} // namespace

TangoDatum build_standard_datum(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                const FpPoly& shapeQ, std::int64_t precision_override) {
    PlaneCurveFamily C = PlaneCurveFamily::standard(p, n, e, shapeQ);
    return build_datum_with_checks(std::move(C), n, std::nullopt, precision_override);
}

TangoDatum build_standard_datum(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                std::int64_t precision_override) {
    PlaneCurveFamily C = PlaneCurveFamily::standard(p, n, e);
    return build_datum_with_checks(std::move(C), n, std::nullopt, precision_override);
}

TangoDatum build_twisted_fixture(std::uint32_t p, std::int64_t precision_override) {
    require_prime_modulus(p);
    std::uint64_t p2 = std::uint64_t(p) * p;
    FpPoly F(p);
    F.insert_term(Monomial::var("X", p2 - p) * Monomial::var("Y", p), FpElem(1, p));
    F.insert_term(Monomial::var("Y", p2), FpElem(1, p));
    F.insert_term(Monomial::var("X", p2 - 1) * Monomial::var("Y", 1), -FpElem(1, p));
    F.insert_term(Monomial::var("Z", p2 - 1) * Monomial::var("X", 1), -FpElem(1, p));
    PlaneCurveFamily C = PlaneCurveFamily::custom(p, 2, 1, F);

    FpPoly x = FpPoly::variable("x", p), y = FpPoly::variable("y", p);
    FpPoly v = x.pow(p2 - p) * y.pow(p) + y.pow(p2); // the transition denominator
    TransitionSpec spec{
        FpRational(x.pow(p2 - 2) * y, v * y.pow(p2 * (p2 - 3))), // z2
        FpRational(y.pow(p2 - 3)),                               // alpha
        FpRational(FpPoly::constant(1, p), v),                   // gamma
    };
    return build_datum_with_checks(std::move(C), 2, spec, precision_override);
}

TransitionData extract_transition(const TangoDatum& datum) {
    const PlaneCurveFamily& C = datum.curve;
    std::uint32_t p = C.p();
    std::uint64_t q = ipow(p, datum.n);
    std::uint64_t d = C.curve_degree();
    FpPoly x = FpPoly::variable("x", p), y = FpPoly::variable("y", p);

    FpRational alpha = FpRational::one(p), gamma = FpRational::one(p), z2 = FpRational::one(p);
    if (datum.declared) {
        alpha = datum.declared->alpha;
        gamma = datum.declared->gamma;
        z2 = datum.declared->z2;
    } else {
        // standard family: alpha = y^{e(p^n e - 3)}, gamma = Q(x,y)^{-p^n},
        // z2 = x^{p^n e - 2} y / (Q(x^{p^n}, y^{p^n}) y^{p^n e (p^n e - 3)})
        std::uint64_t a = std::uint64_t(C.e()) * (d - 3);
        FpPoly Qxy = C.shape()
                         .substitute("X", x)
                         .substitute("Y", y);
        alpha = FpRational(y.pow(a));
        gamma = FpRational(FpPoly::constant(1, p), Qxy.pow(q));
        z2 = FpRational(x.pow(d - 2) * y, Qxy.frobenius_power(datum.n) * y.pow(d * (d - 3)));
    }

    Chart u2 = C.chart_u2();
    FpRational z1 = datum.f_z1;
    FpRational rhs = alpha.pow(q) * z2 + gamma;
    FpRational residual = z1 - rhs;
    FpPoly res_nf = nf_mod(residual.num(), u2.f);
    FpPoly den_nf = nf_mod(residual.den(), u2.f);

    Certificate cert;
    cert.family["p"] = p;
    cert.family["n"] = datum.n;
    CertCheck& ck = cert.add("relation", res_nf.is_zero() && !den_nf.is_zero()
                                             ? Status::Pass
                                             : Status::Fail,
                             "z1 = alpha^{p^n} z2 + gamma as rational functions on the curve");
    ck.witness["alpha"] = alpha.to_string();
    ck.witness["gamma"] = gamma.to_string();
    ck.witness["z2"] = z2.to_string();
    ck.witness["residual_nf"] = res_nf.to_string();
    claim_bool(ck, res_nf.is_zero());
    cert.conclusion = "transition data of the rank-two bundle extracted";

    if (!res_nf.is_zero())
        throw std::runtime_error("transition relation failed to verify; residual " +
                                 res_nf.to_string());
    return TransitionData{alpha, gamma, z2, std::nullopt, std::move(cert)};
}

PthRootResult fn_field_pth_root_detail(const FpRational& g, const Chart& chart,
                                       bool assume_irreducible) {
    std::uint32_t p = g.modulus();
    const FpPoly& f = chart.f;
    FpPoly zero = FpPoly::zero(p);

    if (!assume_irreducible) {
        FpPoly fu = f.derivative_opt(chart.u);
        FpPoly fv = f.derivative_opt(chart.v);
        if (fu.is_zero() && fv.is_zero())
            throw std::invalid_argument("chart equation is a p-th power, not irreducible");
        const FpPoly& pd = fu.is_zero() ? fv : fu;
        const std::string& var = fu.is_zero() ? chart.v : chart.u;
        if (resultant(f, pd, var).is_zero())
            throw std::invalid_argument("chart equation is not squarefree in " + var);
    }

    if (nf_mod(g.den(), f).is_zero())
        throw std::domain_error("denominator vanishes identically on the curve");

    // syntactic route: both parts literal p-th powers
    auto ru = g.num().p_th_root();
    auto rv = g.den().p_th_root();
    if (ru && rv) return {FpRational(*ru, *rv), zero, true};

    FpPoly W = dg_residual_on_chart(g, chart);
    if (!W.is_zero()) return {std::nullopt, W, false};

    // dg = 0 on the curve, so g = h^p for a unique h in K(C); with v = den(g),
    // w = h v is integral over the chart ring, hence polynomial on a smooth
    // chart. Solve w^p = num(g) v^{p-1} mod f coefficientwise over F_p.
    const FpPoly& u = g.num();
    const FpPoly& v = g.den();
    FpPoly target_poly = u * v.pow(p - 1);
    FpPoly target = nf_mod(target_poly, f);
    std::int64_t dbound =
        std::int64_t((target_poly.degree() + p - 1) / p + f.degree());
    auto [lt_f, lc_f] = f.leading_term();

    for (int attempt = 0; attempt < 3; ++attempt, dbound *= 2) {
        std::vector<Monomial> basis;
        for (std::int64_t a = 0; a <= dbound; ++a) {
            for (std::int64_t b = 0; a + b <= dbound; ++b) {
                Monomial m = Monomial::var(chart.u, a) * Monomial::var(chart.v, b);
                if (!lt_f.divides(m)) basis.push_back(m);
            }
        }
        if (basis.size() > 20000)
            throw std::runtime_error("degree-bound overflow in p-th root solve: basis size " +
                                     std::to_string(basis.size()) + " at bound " +
                                     std::to_string(dbound));
        std::map<Monomial, std::size_t, GrlexLess> row_of;
        std::vector<FpPoly> cols;
        cols.reserve(basis.size());
        for (auto& m : basis) {
            FpPoly col = nf_mod(FpPoly::term(FpElem(1, p), m.pow(p)), f);
            for (auto& [mm, cc] : col.terms()) row_of.emplace(mm, 0);
            cols.push_back(std::move(col));
        }
        for (auto& [mm, cc] : target.terms()) row_of.emplace(mm, 0);
        std::size_t nrows = 0;
        for (auto& [mm, idx] : row_of) idx = nrows++;
        std::vector<std::vector<FpElem>> A(nrows, std::vector<FpElem>(basis.size(), FpElem(0, p)));
        std::vector<FpElem> bvec(nrows, FpElem(0, p));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (auto& [mm, cc] : cols[j].terms()) A[row_of[mm]][j] = cc;
        for (auto& [mm, cc] : target.terms()) bvec[row_of[mm]] = cc;
        auto sol = solve_linear_fp(A, bvec);
        if (!sol) continue;
        FpPoly w(p);
        for (std::size_t j = 0; j < basis.size(); ++j) w.insert_term(basis[j], (*sol)[j]);
        if (!nf_mod(w.pow(p) - target_poly, f).is_zero())
            throw std::logic_error("p-th root solve produced a non-root");
        FpRational root(w, v);
        FpRational check = root.pow(p) - g;
        if (!nf_mod(check.num(), f).is_zero())
            throw std::logic_error("p-th root roundtrip failed");
        return {root, zero, false};
    }
    throw std::runtime_error("degree-bound overflow: dg = 0 but no polynomial root within bound " +
                             std::to_string(dbound / 2));
}

std::optional<FpRational> fn_field_pth_root(const FpRational& g, const Chart& chart) {
    return fn_field_pth_root_detail(g, chart).root;
}

Condition2Result certify_condition2(const TangoDatum& datum, const TransitionData& transition) {
    std::uint32_t p = datum.curve.p();
    Chart u2 = datum.curve.chart_u2();
    Certificate cert;
    cert.family = datum.condition1.family;

    bool irr = smooth_checks_pass(datum.condition1);
    {
        CertCheck& ck = cert.add("condition2.irreducibility",
                                 irr ? Status::Pass : Status::Inconclusive,
                                 "smooth plane curve is geometrically irreducible; chart "
                                 "equation stays irreducible over F_p(y)");
        if (!irr) ck.witness["note"] = "smoothness not established; root test skipped";
    }
    if (!irr) {
        cert.conclusion = "condition (2) undecided: irreducibility precondition unresolved";
        return {std::move(cert), std::nullopt, -1};
    }

    FpRational current = transition.gamma;
    for (std::uint32_t depth = 1; depth <= datum.n; ++depth) {
        PthRootResult res = fn_field_pth_root_detail(current, u2, true);
        std::string id = "condition2.root-depth-" + std::to_string(depth);
        if (!res.root) {
            CertCheck& ck = cert.add(id, Status::Fail,
                                     "p-th root in K(C) exists iff dg = 0 on the curve");
            ck.witness["dg_residual"] = res.dg_residual.to_string();
            ck.witness["argument"] = current.to_string();
            claim_bool(ck, res.dg_residual.is_zero());
            cert.conclusion = "condition (2) fails: root extraction stops at depth " +
                              std::to_string(depth) + " of " + std::to_string(datum.n);
            return {std::move(cert), std::nullopt, int(depth)};
        }
        CertCheck& ck = cert.add(id, Status::Pass,
                                 "p-th root in K(C) exists iff dg = 0 on the curve");
        ck.witness["root"] = res.root->to_string();
        ck.witness["route"] = res.via_fast_path ? "exponent-division" : "linear-solve";
        FpRational rt = res.root->pow(p) - current;
        claim_bool(ck, nf_mod(rt.num(), u2.f).is_zero());
        current = *res.root;
    }

    FpRational beta = current;
    {
        std::uint64_t q = ipow(p, datum.n);
        FpRational diff = beta.pow(q) - transition.gamma;
        CertCheck& ck = cert.add("condition2.beta-root-identity", Status::Pass,
                                 "beta^{p^n} = gamma exactly on the curve");
        ck.witness["beta"] = beta.to_string();
        claim_bool(ck, nf_mod(diff.num(), u2.f).is_zero());
    }
    {
        auto vb = valuation_at_infinity(beta, datum.branch);
        CertCheck& ck = cert.add("condition2.beta-regularity",
                                 vb ? Status::Pass : Status::Inconclusive,
                                 "beta regular on U1 cap U2 after the recorded shrinking");
        if (vb) ck.witness["v_inf"] = *vb;
        ck.witness["excluded_locus"] = beta.den().to_string();
        ck.witness["note"] = "inf is outside U1 cap U2; the remaining denominator zero locus "
                             "is shrunk out of U2 and recorded";
        claim_bool(ck, !nf_mod(beta.den(), u2.f).is_zero());
    }
    cert.conclusion = "condition (2) holds with beta = " + beta.to_string();
    return {std::move(cert), beta, -1};
}

QuotientBundleData build_quotient_bundle(const TangoDatum& datum,
                                         const TransitionData& transition) {
    if (!transition.beta)
        throw std::invalid_argument("build_quotient_bundle: beta absent (condition (2) not certified)");
    auto a = valuation_at_infinity(*transition.beta, datum.branch);
    auto b = valuation_at_infinity(transition.alpha, datum.branch);
    if (!a || !b)
        throw std::runtime_error("build_quotient_bundle: valuation indeterminate at current precision");

    std::int64_t d0 = -std::min({*a, *b, std::int64_t(0)});
    DivisorOnC D0 = DivisorOnC::infinity_times(d0);
    std::int64_t degD = datum.D.degree();

    Certificate cert;
    cert.family = datum.condition1.family;
    {
        CertCheck& ck = cert.add("quotient.d0", Status::Pass,
                                 "D0 = -min(v_inf(beta), v_inf(alpha), 0) inf is effective");
        ck.witness["a_inf"] = *a;
        ck.witness["b_inf"] = *b;
        ck.witness["D0"] = D0.to_string();
        claim_int(ck, "ge", d0, 0);
    }
    {
        CertCheck& ck = cert.add("quotient.h0-bound", Status::Pass,
                                 "h^0(E(D0)) >= h^0(O(D0)) + 1 >= 2 via the lifted section");
        claim_int(ck, "ge", d0, 0); // deg D0 >= 0 gives h^0(O(D0)) >= 1
        ck.witness["h0_lower_bound"] = 2;
    }
    {
        // saturation: min(v(gamma0 alpha), v(gamma0 beta)) = 0 for the local
        // defining function gamma0 of D0 at inf
        std::int64_t sat = std::min(d0 + *b, d0 + *a);
        CertCheck& ck = cert.add("quotient.saturation", Status::Pass,
                                 "(gamma0 alpha, gamma0 beta) = 1 in the local ring at inf");
        claim_int(ck, "eq", sat, 0);
    }
    cert.conclusion = "quotient line bundle L0 = L(D0) constructed, h^0 bound 2";

    return QuotientBundleData{D0, "L(D + " + D0.to_string() + ")", degD + d0, 2,
                              std::move(cert)};
}

TangoCertification certify_tango(const TangoDatum& datum) {
    TangoCertification out{datum, std::nullopt, Condition2Result{}, std::nullopt, Certificate{}};
    Certificate full = datum.condition1;

    try {
        out.transition = extract_transition(datum);
        full.merge("transition", out.transition->relation);
    } catch (const std::exception& ex) {
        CertCheck& ck = full.add("transition.relation", Status::Fail,
                                 "z1 = alpha^{p^n} z2 + gamma as rational functions");
        ck.witness["error"] = ex.what();
    }

    if (out.transition) {
        out.condition2 = certify_condition2(datum, *out.transition);
        full.merge("", out.condition2.cert);
        if (out.condition2.beta) {
            out.transition->beta = out.condition2.beta;
            try {
                out.quotient = build_quotient_bundle(datum, *out.transition);
                full.merge("", out.quotient->cert);
            } catch (const std::exception& ex) {
                CertCheck& ck = full.add("quotient.d0", Status::Inconclusive,
                                         "quotient bundle construction");
                ck.witness["error"] = ex.what();
            }
        }
    }

    std::string level = std::to_string(datum.n);
    if (full.status() == Status::Pass)
        full.conclusion = "(C, z1, D) is " + level + "-Tango data";
    else if (full.status() == Status::Fail)
        full.conclusion = "(C, z1, D) is not " + level + "-Tango data";
    else
        full.conclusion = "certification of (C, z1, D) as " + level + "-Tango data undecided";
    out.full = std::move(full);
    return out;
}

} // namespace raynaud
