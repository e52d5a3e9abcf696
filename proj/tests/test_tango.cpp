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

#include <doctest.h>

#include <random>

#include "raynaud/tango.hpp"

using namespace raynaud;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

FpPoly random_poly(std::mt19937_64& rng, std::uint32_t p, int max_terms, int max_deg,
                   const std::vector<std::string>& vars) {
    FpPoly f(p);
    int terms = 1 + int(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (auto& v : vars) {
            unsigned ex = unsigned(rng() % (max_deg + 1));
            if (ex) m = m * Monomial::var(v, ex);
        }
        f.insert_term(m, FpElem(rng() % p, p));
    }
    return f;
}

} // namespace

TEST_SUITE_BEGIN("tango");

TEST_CASE("standard datum construction") {
    TangoDatum d213 = build_standard_datum(2, 1, 3);
    CHECK(d213.condition1.status() == Status::Pass);
    CHECK(d213.D == DivisorOnC::infinity_times(9));
    CHECK(d213.n == 1);

    TangoDatum d221 = build_standard_datum(2, 2, 1);
    CHECK(d221.condition1.status() == Status::Pass);
    CHECK(d221.D == DivisorOnC::infinity_times(1));

    // degenerate boundary p^n e = 3 rejected
    CHECK_THROWS_AS(build_standard_datum(3, 1, 1), std::invalid_argument);

    // p^n deg D = 2g - 2 for every constructed datum
    for (auto& [p, n, e] : std::vector<std::array<std::uint32_t, 3>>{
             {2, 1, 3}, {2, 2, 1}, {3, 1, 2}, {5, 1, 1}}) {
        TangoDatum d = build_standard_datum(p, n, e);
        std::int64_t dd = std::int64_t(d.curve.curve_degree());
        CHECK(std::int64_t(ipow(p, n)) * d.D.degree() == dd * (dd - 3));
    }
}

TEST_CASE("transition data of the standard family") {
    TangoDatum datum = build_standard_datum(2, 1, 3);
    TransitionData tr = extract_transition(datum);
    CHECK(tr.relation.status() == Status::Pass);

    std::uint32_t p = 2;
    FpPoly y = FpPoly::variable("y", p);
    // alpha = y^{e(p^n e - 3)} = y^9
    CHECK(tr.alpha == FpRational(y.pow(9)));
    // gamma = (Q^{-1}(x,y))^{p^n} = y^{-6} for Q = Y^3
    CHECK(tr.gamma == FpRational(FpPoly::constant(1, p), y.pow(6)));
}

TEST_CASE("transition data of the twisted fixture") {
    TangoDatum datum = build_twisted_fixture(2);
    CHECK(datum.condition1.status() == Status::Pass);
    CHECK(datum.D == DivisorOnC::infinity_times(1)); // p^2 - 3 = 1
    TransitionData tr = extract_transition(datum);
    CHECK(tr.relation.status() == Status::Pass);
    CHECK(tr.gamma == FpRational(FpPoly::constant(1, 2), FpPoly::parse("1*x^2*y^2+1*y^4", 2)));
}

TEST_CASE("function field p-th root: the depth-1/depth-2 fixture") {
    TangoDatum datum = build_twisted_fixture(2);
    Chart u2 = datum.curve.chart_u2();
    std::uint32_t p = 2;

    // gamma = (x^2 y^2 + y^4)^{-1} has the root (x y + y^2)^{-1}
    FpRational gamma(FpPoly::constant(1, p), FpPoly::parse("1*x^2*y^2+1*y^4", p));
    auto root = fn_field_pth_root(gamma, u2);
    REQUIRE(root.has_value());
    FpRational expected(FpPoly::constant(1, p), FpPoly::parse("1*x*y+1*y^2", p));
    CHECK(*root == expected);
    // verified by squaring
    CHECK(root->pow(2) == gamma);

    // the root itself has no further p-th root: d(xy + y^2) != 0 on the curve
    PthRootResult res2 = fn_field_pth_root_detail(expected, u2, true);
    CHECK_FALSE(res2.root.has_value());
    CHECK_FALSE(res2.dg_residual.is_zero());

    // constants are their own p-th roots
    FpRational c(FpPoly::constant(1, p));
    auto croot = fn_field_pth_root(c, u2);
    REQUIRE(croot.has_value());
    CHECK(*croot == c);
}

TEST_CASE("function field p-th root: linear-solve route on disguised powers") {
    TangoDatum datum = build_twisted_fixture(2);
    Chart u2 = datum.curve.chart_u2();
    std::uint32_t p = 2;
    std::mt19937_64 rng(99);

    int solved_via_linear = 0;
    for (int i = 0; i < 200; ++i) {
        FpPoly h = random_poly(rng, p, 3, 2, {"x", "y"});
        if (h.is_zero()) continue;
        FpPoly disguise = random_poly(rng, p, 2, 2, {"x", "y"});
        FpPoly g_num = h.frobenius_power(1) + u2.f * disguise;
        if (g_num.is_zero()) continue;
        FpRational g(g_num);
        PthRootResult res = fn_field_pth_root_detail(g, u2, true);
        REQUIRE(res.root.has_value());
        if (!res.via_fast_path) ++solved_via_linear;
        // roundtrip modulo the curve
        FpRational back = res.root->pow(p) - g;
        CHECK(nf_mod(back.num(), u2.f).is_zero());
    }
    CHECK(solved_via_linear > 0);
}

TEST_CASE("function field p-th root agrees with the polynomial-level root") {
    TangoDatum datum = build_standard_datum(2, 1, 3);
    Chart u2 = datum.curve.chart_u2();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        FpPoly h = random_poly(rng, 2, 4, 3, {"x", "y"});
        if (h.is_zero()) continue;
        FpPoly sq = h.frobenius_power(1);
        auto poly_root = sq.p_th_root();
        auto fn_root = fn_field_pth_root(FpRational(sq), u2);
        REQUIRE(poly_root.has_value());
        REQUIRE(fn_root.has_value());
        // equality as functions on the curve
        FpRational diff = *fn_root - FpRational(*poly_root);
        CHECK(nf_mod(diff.num(), u2.f).is_zero());
    }
}

TEST_CASE("condition (2) passes across the standard grid") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        for (std::uint32_t n = 1; n <= 4; ++n) {
            std::uint64_t pn = ipow(p, n);
            if (pn > 20) break;
            for (std::uint32_t e = 1; pn * e <= 20; ++e) {
                if (pn * e <= 3) continue;
                TangoDatum datum = build_standard_datum(p, n, e);
                TransitionData tr = extract_transition(datum);
                Condition2Result c2 = certify_condition2(datum, tr);
                CHECK(c2.cert.status() == Status::Pass);
                REQUIRE(c2.beta.has_value());
                // beta = Q^{-1}(x, y) = y^{-e} for the default shape
                FpRational expected(FpPoly::constant(1, p),
                                    FpPoly::variable("y", p).pow(e));
                CHECK(*c2.beta == expected);
            }
        }
    }
}

TEST_CASE("condition (2) fails at depth 2 on the twisted fixture") {
    for (std::uint32_t p : {2u, 3u}) {
        TangoDatum datum = build_twisted_fixture(p);
        TransitionData tr = extract_transition(datum);
        Condition2Result c2 = certify_condition2(datum, tr);
        CHECK(c2.cert.status() == Status::Fail);
        CHECK(c2.fail_depth == 2); // root exists at depth 1, not at depth 2
        CHECK_FALSE(c2.beta.has_value());
        // depth-1 check passed
        bool depth1_pass = false;
        for (auto& ck : c2.cert.checks)
            if (ck.id == "condition2.root-depth-1" && ck.status == Status::Pass)
                depth1_pass = true;
        CHECK(depth1_pass);
    }
}

TEST_CASE("quotient bundle data") {
    // Q = Y^e: beta = y^{-e}, alpha = y^{e(p^n e - 3)} so D0 = e inf
    TangoDatum datum = build_standard_datum(2, 1, 3);
    TransitionData tr = extract_transition(datum);
    Condition2Result c2 = certify_condition2(datum, tr);
    tr.beta = c2.beta;
    QuotientBundleData qb = build_quotient_bundle(datum, tr);
    CHECK(qb.cert.status() == Status::Pass);
    CHECK(qb.D0 == DivisorOnC::infinity_times(3));
    CHECK(qb.L0_degree == 12); // deg D + deg D0 = 9 + 3
    CHECK(qb.h0_lower_bound == 2);

    // beta absent errors
    TransitionData no_beta = extract_transition(datum);
    CHECK_THROWS_AS(build_quotient_bundle(datum, no_beta), std::invalid_argument);

    // synthetic case: alpha and beta both regular at inf gives D0 = 0 while
    // the h^0 >= 2 bound still holds through the constant section
    TransitionData synthetic = extract_transition(datum);
    std::uint32_t p = 2;
    synthetic.alpha = FpRational(FpPoly::variable("y", p).pow(2));
    synthetic.beta = FpRational(FpPoly::variable("y", p));
    QuotientBundleData qb0 = build_quotient_bundle(datum, synthetic);
    CHECK(qb0.D0 == DivisorOnC{});
    CHECK(qb0.h0_lower_bound == 2);
    for (auto& ck : qb0.cert.checks) {
        if (ck.id == "quotient.d0") CHECK(ck.status == Status::Pass);
        if (ck.id == "quotient.h0-bound") CHECK(ck.status == Status::Pass);
        // min(v(alpha), v(beta)) = 1 > 0: the inclusion is not saturated here
        if (ck.id == "quotient.saturation") CHECK(ck.status == Status::Fail);
    }
}

TEST_CASE("INCONCLUSIVE smoothness propagates into condition (2)") {
    TangoDatum datum = build_standard_datum(2, 1, 3);
    TransitionData tr = extract_transition(datum);
    // degrade a smoothness check, as an unresolved extension candidate would
    for (auto& ck : datum.condition1.checks)
        if (ck.id == "smooth.chart-Z") ck.status = Status::Inconclusive;
    Condition2Result c2 = certify_condition2(datum, tr);
    CHECK(c2.cert.status() == Status::Inconclusive);
    CHECK_FALSE(c2.beta.has_value());
    CHECK(c2.fail_depth == -1); // undecided, not a failure
}

TEST_CASE("full pipeline certificate") {
    TangoCertification good = certify_tango(build_standard_datum(3, 1, 2));
    CHECK(good.full.status() == Status::Pass);
    CHECK(good.full.conclusion == "(C, z1, D) is 1-Tango data");
    CHECK(recheck(good.full));

    TangoCertification bad = certify_tango(build_twisted_fixture(2));
    CHECK(bad.full.status() == Status::Fail);
    CHECK(bad.full.conclusion == "(C, z1, D) is not 2-Tango data");
    CHECK(recheck(bad.full));
}

TEST_SUITE_END();
