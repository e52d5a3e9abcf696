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

#include "raynaud/pathology.hpp"

using namespace raynaud;

TEST_SUITE_BEGIN("pathology");

TEST_CASE("obstruction degree: spot values and the two-route regression") {
    CHECK(obstruction_degree(2, 1, 1) == 3);
    CHECK(obstruction_degree(2, 1, 2) == 18);
    CHECK(obstruction_degree(3, 1, 1) == 5);

    // the op itself compares the ledger route against the closed form and
    // throws on disagreement; sweep the whole grid
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n : {1u, 2u})
            for (std::uint32_t k = 1; k <= 8; ++k) CHECK_NOTHROW(obstruction_degree(p, n, k));
}

TEST_CASE("base point certificate: flagship parameters") {
    RaynaudParams P = RaynaudParams::standard(2, 1, 3, 3);
    DivisorOnC Q1 = DivisorOnC::infinity_times(1);

    Certificate ok = certify_base_point(P, 1, Q1, BasePointMode::Adjoint);
    CHECK(ok.status() == Status::Pass);
    CHECK(recheck(ok));
    // witness includes D0 = 3 inf and the effectivity remainder 2
    bool has_d0 = false, has_remainder = false;
    for (auto& c : ok.checks) {
        if (c.id == "basepoint.l0-h0" && c.witness.contains("L0"))
            has_d0 = c.witness["L0"].get<std::string>().find("3*inf") != std::string::npos;
        if (c.id == "basepoint.effectivity")
            has_remainder = c.witness["degree"].get<std::int64_t>() == 2;
    }
    CHECK(has_d0);
    CHECK(has_remainder);

    // Q of degree 4 exceeds the obstruction budget 3: effectivity fails
    Certificate fail = certify_base_point(P, 1, DivisorOnC::infinity_times(4),
                                          BasePointMode::Adjoint);
    CHECK(fail.status() == Status::Fail);
    bool eff_failed = false;
    for (auto& c : fail.checks)
        if (c.id == "basepoint.effectivity" && c.status == Status::Fail) eff_failed = true;
    CHECK(eff_failed);

    // ample mode with a twist q >= p^n: the q-bound check fails
    Certificate qfail = certify_base_point(P, 6, Q1, BasePointMode::Ample); // q = 2 = p^n
    CHECK(qfail.status() == Status::Fail);
    bool qcheck_failed = false;
    for (auto& c : qfail.checks)
        if (c.id == "basepoint.q-bound" && c.status == Status::Fail) qcheck_failed = true;
    CHECK(qcheck_failed);

    CHECK_THROWS_AS(certify_base_point(P, 1, DivisorOnC{}, BasePointMode::Adjoint),
                    std::invalid_argument); // deg Q must be positive
}

TEST_CASE("fujita search: witnesses for r = 1..7") {
    struct Expect {
        std::uint32_t r, p, n, k;
    };
    // lexicographic (p, n, k) candidate order under the curve-degree budget
    std::vector<Expect> expected = {
        {1, 2, 1, 1}, {2, 2, 1, 1}, {3, 2, 2, 1}, {4, 2, 2, 1},
        {5, 5, 1, 1}, {6, 7, 1, 1}, {7, 7, 1, 1},
    };
    for (auto& ex : expected) {
        FujitaResult res = fujita_search(ex.r);
        CHECK(res.cert.status() == Status::Pass);
        CHECK(res.params.p == ex.p);
        CHECK(res.params.n == ex.n);
        CHECK(res.params.k == ex.k);
        CHECK(res.params.l > ex.r);
        CHECK(recheck(res.cert));
        // Q = (r-1) inf for r >= 2, inf for r = 1
        CHECK(res.params.Qdiv.degree() == (ex.r >= 2 ? std::int64_t(ex.r) - 1 : 1));
    }
}

TEST_CASE("fujita search: budget exhaustion and the first over-budget witness") {
    // within the default curve-degree budget 64 the largest reachable l is 8,
    // so r = 8 has no witness
    CHECK_THROWS_WITH_AS(fujita_search(8), doctest::Contains("no desk-scale witness"),
                         std::runtime_error);
    // raising the budget to 72 admits (2,3,1): l = 9 > 8, obstruction 15
    FujitaResult res = fujita_search(8, 72);
    CHECK(res.params.p == 2);
    CHECK(res.params.n == 3);
    CHECK(res.params.k == 1);
    CHECK(res.cert.status() == Status::Pass);
}

TEST_CASE("strong non-vanishing certificates") {
    for (auto& [m, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 2}, {1, 3}, {2, 2}}) {
        NonvanishingResult res = certify_nonvanishing(m, p);
        CHECK(res.cert.status() == Status::Pass);
        CHECK(recheck(res.cert));
    }

    // (1,2): R^1 dual decomposition exactly O(2 inf - N) + O(2 inf + N) + 0
    NonvanishingResult nv = certify_nonvanishing(1, 2);
    REQUIRE(nv.r1_dual.terms.size() == 3);
    CHECK(nv.r1_dual.terms[0].sym_j == 0);
    CHECK(nv.r1_dual.terms[0].twist == DivisorOnC::infinity_times(-1));
    CHECK(nv.r1_dual.terms[1].twist == DivisorOnC::infinity_times(5));
    CHECK(nv.r1_dual.terms[2].dropped);
}

TEST_CASE("non-vanishing scales to height m = 3 (degree-72 curve)") {
    NonvanishingResult res = certify_nonvanishing(3, 2); // n = 3, l = 9, e = 9
    CHECK(res.cert.status() == Status::Pass);
    CHECK(res.params.l == 9);
    CHECK(res.params.deg_N() == 69); // k = 1: 72 - 3
    CHECK(recheck(res.cert));
}

TEST_CASE("non-vanishing effectivity is monotone in k") {
    // spec invariant: any k above the minimal one also passes, because the
    // sub-bundle coefficient deg N - p^m grows with k
    for (std::uint32_t k = 1; k <= 4; ++k) {
        std::uint32_t p = 2, m = 1, n = 1;
        std::uint32_t l = 3;
        RaynaudParams P = RaynaudParams::standard(p, n, k * l, l);
        SheafOnC dual = r1_dual_decomposition(m, DivisorOnC::infinity_times(1), P);
        std::int64_t j0 = dual.terms[0].sym_j;
        DivisorOnC quotient = P.N * (j0 * std::int64_t(P.l)) + dual.terms[0].twist;
        DivisorOnC sub = quotient * -1;
        CHECK(sub.coeff(PointId::infinity()) >= 1);
        CHECK(sub.coeff(PointId::infinity()) == P.deg_N() - 2); // deg N - p^m
    }
}

TEST_CASE("certificates re-verify from their witnesses") {
    Certificate cert = certify_base_point(RaynaudParams::standard(2, 2, 5, 5), 2,
                                          DivisorOnC::infinity_times(1),
                                          BasePointMode::Ample);
    CHECK(recheck(cert));
    // JSON round trip preserves the certificate exactly
    Certificate back = Certificate::from_json(cert.to_json());
    CHECK(back == cert);
    CHECK(recheck(back));
    // tampering with a recorded claim is detected
    Json j = cert.to_json();
    for (auto& c : j["checks"])
        if (c["witness"].contains("claims"))
            for (auto& cl : c["witness"]["claims"]) cl["lhs"] = cl["lhs"].get<std::int64_t>() + 1;
    CHECK_FALSE(recheck(Certificate::from_json(j)));
}

TEST_SUITE_END();
