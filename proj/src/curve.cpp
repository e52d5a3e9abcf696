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

#include "raynaud/curve.hpp"

#include <algorithm>
#include <sstream>

#include "raynaud/factor.hpp"
#include "raynaud/zeroset.hpp"

namespace raynaud {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

void require_homogeneous(const FpPoly& F, std::uint64_t degree, const char* what) {
    for (auto& [m, c] : F.terms())
        if (m.degree() != degree)
            throw std::invalid_argument(std::string(what) + " must be homogeneous of degree " +
                                        std::to_string(degree));
}

} // namespace

PlaneCurveFamily::PlaneCurveFamily(std::uint32_t p, std::uint32_t n, std::uint32_t e, FpPoly Q,
                                   FpPoly F, bool custom)
    : p_(p), n_(n), e_(e), Q_(std::move(Q)), F_(std::move(F)), custom_(custom) {}

PlaneCurveFamily PlaneCurveFamily::standard(std::uint32_t p, std::uint32_t n, std::uint32_t e) {
    FpPoly Q(p);
    Q.insert_term(Monomial::var("Y", e), FpElem(1, p));
    return standard(p, n, e, Q);
}

PlaneCurveFamily PlaneCurveFamily::standard(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                            const FpPoly& shapeQ) {
    require_prime_modulus(p);
    if (n < 1) throw std::invalid_argument("level n must be >= 1");
    if (e < 1) throw std::invalid_argument("shape degree e must be >= 1");
    if (shapeQ.modulus() != p) throw std::invalid_argument("shape modulus mismatch");
    require_homogeneous(shapeQ, e, "shape Q");
    for (auto& v : shapeQ.vars_used())
        if (v != "X" && v != "Y")
            throw std::invalid_argument("shape Q must be a polynomial in X, Y");
    if (shapeQ.coeff(Monomial::var("Y", e)).is_zero())
        throw std::invalid_argument("shape Q needs a nonzero Y^e coefficient");

    std::uint64_t q = ipow(p, n);
    std::uint64_t d = q * e;
    FpPoly F = shapeQ.frobenius_power(n); // Q(X^{p^n}, Y^{p^n})
    FpPoly t1(p), t2(p);
    t1.insert_term(Monomial::var("X", d - 1) * Monomial::var("Y", 1), FpElem(1, p));
    t2.insert_term(Monomial::var("Z", d - 1) * Monomial::var("X", 1), FpElem(1, p));
    F = F - t1 - t2;
    require_homogeneous(F, d, "standard family equation");
    return PlaneCurveFamily(p, n, e, shapeQ, F, false);
}

PlaneCurveFamily PlaneCurveFamily::custom(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                          const FpPoly& F) {
    require_prime_modulus(p);
    if (F.is_zero()) throw std::invalid_argument("custom curve equation is zero");
    // homogeneous of its own degree; the p^n e identity is a Tango-pipeline
    // requirement, not a curve-level one
    require_homogeneous(F, F.degree(), "custom curve equation");
    return PlaneCurveFamily(p, n, e, FpPoly::zero(p), F, true);
}

std::uint64_t PlaneCurveFamily::frobenius_degree() const { return ipow(p_, n_); }
std::uint64_t PlaneCurveFamily::curve_degree() const {
    return custom_ ? F_.degree() : frobenius_degree() * e_;
}

Chart PlaneCurveFamily::chart_u1() const {
    FpPoly f = F_.substitute("X", FpElem(1, p_));
    f = f.substitute("Y", FpPoly::variable("y1", p_));
    f = f.substitute("Z", FpPoly::variable("z1", p_));
    return Chart{"U1", f, "y1", "z1", false, "y1 = Y/X", "z1 = Z/X"};
}

Chart PlaneCurveFamily::chart_u2() const {
    FpPoly f = F_.substitute("Z", FpElem(1, p_));
    f = f.substitute("X", FpPoly::variable("x", p_));
    f = f.substitute("Y", FpPoly::variable("y", p_));
    return Chart{"U2", f, "x", "y", true, "x = X/Z", "y = Y/Z"};
}

std::int64_t PlaneCurveFamily::default_precision() const {
    std::int64_t d = std::int64_t(curve_degree());
    return 3 * d * (d - 3) + 10;
}

Certificate smoothness_certify(const PlaneCurveFamily& C, int t_max) {
    if (C.equation().is_zero()) throw std::invalid_argument("smoothness of zero equation");
    std::uint32_t p = C.p();
    Certificate cert;
    cert.family["p"] = C.p();
    cert.family["n"] = C.n();
    cert.family["e"] = C.e();
    cert.family["equation"] = C.equation().to_string();

    struct ChartSpec {
        const char* id;
        const char* unit_var;
        std::string u, v;
    };
    // The three standard charts cover the projective plane, so emptiness of
    // the three affine singular systems certifies projective smoothness (the
    // Euler relation makes the fourth partial vanish automatically).
    const ChartSpec specs[] = {
        {"chart-X", "X", "Y", "Z"},
        {"chart-Y", "Y", "X", "Z"},
        {"chart-Z", "Z", "X", "Y"},
    };
    for (auto& sp : specs) {
        FpPoly f = C.equation().substitute(sp.unit_var, FpElem(1, p));
        FpPoly fu = f.derivative_opt(sp.u);
        FpPoly fv = f.derivative_opt(sp.v);
        ZeroSetResult zs = common_zero_set({f, fu, fv}, {sp.u, sp.v}, t_max);
        Status st = zs.kind == ZeroSetKind::Empty
                        ? Status::Pass
                        : (zs.kind == ZeroSetKind::NonEmpty ? Status::Fail : Status::Inconclusive);
        CertCheck& ck = cert.add(std::string("smooth.") + sp.id, st,
                                 "Jacobian criterion: f = f_u = f_v = 0 has no solution");
        ck.witness["chart"] = sp.id;
        ck.witness["vars"] = std::string(sp.u) + "," + std::string(sp.v);
        if (!zs.witness.empty()) ck.witness["note"] = zs.witness;
    }
    cert.conclusion = "curve is smooth over the algebraic closure";
    return cert;
}

std::uint64_t genus(const PlaneCurveFamily& C, const Certificate& smoothness) {
    if (smoothness.status() != Status::Pass)
        throw std::invalid_argument("genus requires a passing smoothness certificate");
    std::uint64_t d = C.curve_degree();
    std::uint64_t g = (d - 1) * (d - 2) / 2;
    if (2 * std::int64_t(g) - 2 != std::int64_t(d) * (std::int64_t(d) - 3))
        throw std::logic_error("genus degree identity failed");
    return g;
}

std::vector<LinePoint> line_intersection_at_X0(const PlaneCurveFamily& C) {
    std::uint32_t p = C.p();
    FpPoly G = C.equation().substitute("X", FpElem(0, p));
    if (G.is_zero())
        throw std::invalid_argument("curve contains the line X = 0");
    std::uint64_t delta = C.curve_degree();
    // g(Y) = G(Y, 1); the point [0:1:0] soaks up the degree drop.
    FpPoly g = G.substitute("Z", FpElem(1, p));
    std::vector<LinePoint> out;
    std::uint64_t dg = g.is_constant() ? 0 : g.deg_in("Y");
    if (dg < delta) out.push_back({PointId::named("[0:1:0]"), delta - dg});
    if (!g.is_constant()) {
        for (auto& fac : factor_univariate(g, "Y")) {
            std::uint64_t fd = fac.factor.deg_in("Y");
            if (fd == 1) {
                auto roots = rational_roots(fac.factor, "Y");
                FpElem r = roots.front().first;
                if (r.is_zero())
                    out.push_back({PointId::infinity(), fac.multiplicity});
                else
                    out.push_back({PointId::named("[0:" + r.to_string() + ":1]"),
                                   fac.multiplicity});
            } else {
                out.push_back({PointId::named("cluster(" + fac.factor.to_string() + ")",
                                              static_cast<std::uint32_t>(fd)),
                               fac.multiplicity});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const LinePoint& a, const LinePoint& b) { return a.point < b.point; });
    return out;
}

LaurentSeries expand_at_infinity(const PlaneCurveFamily& C, std::int64_t T) {
    std::uint32_t p = C.p();
    std::int64_t d = std::int64_t(C.curve_degree());
    if (T < d + 1)
        throw std::invalid_argument("precision T=" + std::to_string(T) +
                                    " too small: series would be indistinguishable from 0");
    Chart u2 = C.chart_u2();
    // Fixed-point form x = g(x,y): isolate the unique x^1 y^0 term.
    FpElem c1 = u2.f.coeff(Monomial::var("x", 1));
    if (c1.is_zero())
        throw std::invalid_argument("bad fixed-point form: chart equation has no bare x term");
    FpPoly g = FpPoly::variable("x", p) - u2.f * c1.inverse();
    std::uint32_t xid = VarTable::id("x"), yid = VarTable::id("y");
    for (auto& [m, c] : g.terms()) {
        std::uint64_t xe = m.deg_in(xid), ye = m.deg_in(yid);
        bool ok = (xe == 0 && ye >= 1) || (xe == 1 && ye >= 1) || xe >= 2;
        if (!ok)
            throw std::invalid_argument("bad fixed-point form: offending term " +
                                        FpPoly::term(c, m).to_string());
    }

    LaurentSeries s = LaurentSeries::zero("y", p, T);
    std::int64_t agreement = -1;
    for (std::int64_t iter = 0; iter <= T + 2; ++iter) {
        LaurentSeries next = eval_poly_at_series(g, "x", s, "y").truncated(T);
        if (next.same_coeffs(s)) {
            // converged; verify the defining property f(x(y), y) = 0 mod y^T
            LaurentSeries residual = eval_poly_at_series(u2.f, "x", next, "y");
            if (!residual.known_zero_to_precision())
                throw std::logic_error("branch series does not satisfy the chart equation");
            return next;
        }
        // contraction progress: the first disagreeing exponent must move up
        LaurentSeries diff = next - s;
        auto v = diff.valuation();
        std::int64_t agree_now = v ? *v : T;
        if (agree_now <= agreement)
            throw std::invalid_argument("bad fixed-point form: valuation fails to increase");
        agreement = agree_now;
        s = next;
    }
    throw std::logic_error("fixed-point iteration failed to converge");
}

std::optional<std::int64_t> valuation_at_infinity(const FpRational& g,
                                                  const LaurentSeries& x_series) {
    if (g.num().is_zero())
        throw std::invalid_argument("valuation of the zero function");
    if (g.den().is_zero())
        throw std::invalid_argument("division by exactly-zero polynomial");
    LaurentSeries num = eval_poly_at_series(g.num(), "x", x_series, "y");
    LaurentSeries den = eval_poly_at_series(g.den(), "x", x_series, "y");
    auto vn = num.valuation();
    auto vd = den.valuation();
    if (!vn || !vd) return std::nullopt; // Indeterminate: raise T and retry
    return *vn - *vd;
}

std::optional<std::int64_t> differential_valuation_at_infinity(const FpRational& g,
                                                               const LaurentSeries& x_series) {
    if (g.den().is_zero())
        throw std::invalid_argument("division by exactly-zero polynomial");
    LaurentSeries num = eval_poly_at_series(g.num(), "x", x_series, "y");
    LaurentSeries den = eval_poly_at_series(g.den(), "x", x_series, "y");
    if (!den.valuation()) return std::nullopt;
    LaurentSeries G = num * den.invert();
    auto v = G.derivative().valuation();
    if (!v) return std::nullopt; // char-p cancellation up to precision
    return v;
}

Certificate generates_omega_on_chart(const PlaneCurveFamily& C, const Chart& chart,
                                     const std::string& var, int t_max) {
    if (var != chart.u && var != chart.v)
        throw std::invalid_argument("variable " + var + " is not a coordinate of " + chart.id);
    const std::string other = (var == chart.u) ? chart.v : chart.u;
    FpPoly fo = chart.f.derivative_opt(other);

    Certificate cert;
    cert.family["chart"] = chart.id;
    cert.family["var"] = var;
    cert.family["equation"] = chart.f.to_string();
    std::string anchor = "d" + var + " generates the differentials iff d(f)/d(" + other +
                         ") is a unit on the chart";

    if (fo.is_zero()) {
        CertCheck& ck = cert.add("omega.unit", Status::Fail, anchor);
        ck.witness["note"] = "partial in " + other + " vanishes identically";
        cert.conclusion = "d" + var + " does not generate on " + chart.id;
        return cert;
    }
    if (fo.is_constant()) {
        CertCheck& ck = cert.add("omega.unit", Status::Pass, anchor);
        ck.witness["note"] = "shortcut: partial is the nonzero constant " +
                             fo.constant_value().to_string();
        cert.conclusion = "d" + var + " generates the differentials on all of " + chart.id;
        return cert;
    }

    if (chart.contains_infinity) {
        // The chart may be shrunk around inf = (0,0): admissible iff the
        // partial does not vanish there and does not vanish on the whole
        // curve. This avoids the eliminant entirely; the excluded locus is
        // recorded rather than solved.
        FpElem at_inf = fo.substitute(chart.u, FpElem(0, C.p()))
                            .substitute(chart.v, FpElem(0, C.p()))
                            .constant_value();
        bool on_curve_zero = nf_mod(fo, chart.f).is_zero();
        if (!at_inf.is_zero() && !on_curve_zero) {
            CertCheck& ck = cert.add("omega.unit-after-shrink", Status::Pass, anchor);
            ck.witness["excluded_locus"] = fo.to_string();
            ck.witness["note"] = "chart shrunk: excluded locus V(f, " + fo.to_string() +
                                 ") avoids inf; partial at inf = " + at_inf.to_string();
            cert.conclusion = "d" + var + " generates the differentials on a shrunk " + chart.id +
                              " containing inf";
            return cert;
        }
        CertCheck& ck = cert.add("omega.unit-after-shrink", Status::Fail, anchor);
        ck.witness["note"] = on_curve_zero ? "partial vanishes identically on the curve"
                                           : "partial vanishes at inf, shrinking cannot help";
        cert.conclusion = "d" + var + " does not generate on " + chart.id + " near inf";
        return cert;
    }

    ZeroSetResult zs = common_zero_set({chart.f, fo}, {chart.u, chart.v}, t_max);
    if (zs.kind == ZeroSetKind::Empty) {
        CertCheck& ck = cert.add("omega.unit", Status::Pass, anchor);
        ck.witness["note"] = "partial has no zero on the chart (resultant path)";
        cert.conclusion = "d" + var + " generates the differentials on all of " + chart.id;
        return cert;
    }

    if (zs.kind == ZeroSetKind::NonEmpty) {
        CertCheck& ck = cert.add("omega.unit", Status::Fail, anchor);
        ck.witness["witness"] = zs.witness;
        cert.conclusion = "d" + var + " does not generate on " + chart.id;
    } else {
        CertCheck& ck = cert.add("omega.unit", Status::Inconclusive, anchor);
        ck.witness["note"] = zs.witness;
        cert.conclusion = "unit test for d" + var + " on " + chart.id + " undecided";
    }
    return cert;
}

PlaneCurveFamily parse_curve_fixture(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("empty curve fixture");
    std::istringstream hs(header);
    std::uint32_t p = 0, n = 0, e = 0;
    if (!(hs >> p >> n >> e)) throw std::invalid_argument("curve fixture header must be 'p n e'");
    std::string second;
    if (!std::getline(is, second)) throw std::invalid_argument("curve fixture missing polynomial");
    // trim
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    second = trim(second);
    if (second == "custom") {
        std::string third;
        if (!std::getline(is, third))
            throw std::invalid_argument("custom curve fixture missing equation");
        return PlaneCurveFamily::custom(p, n, e, FpPoly::parse(trim(third), p));
    }
    return PlaneCurveFamily::standard(p, n, e, FpPoly::parse(second, p));
}

std::string curve_fixture_to_string(const PlaneCurveFamily& C) {
    std::ostringstream os;
    os << C.p() << " " << C.n() << " " << C.e() << "\n";
    if (C.is_custom())
        os << "custom\n" << C.equation().to_string() << "\n";
    else
        os << C.shape().to_string() << "\n";
    return os.str();
}

} // namespace raynaud
