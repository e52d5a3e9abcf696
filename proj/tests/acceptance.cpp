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

// Acceptance suite: every release criterion runs here, exactly and at the
// stated runtime bound, printing one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "raynaud/pathology.hpp"
#include "raynaud/tango.hpp"
#include "raynaud/zeroset.hpp"

using namespace raynaud;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(std::ostringstream&)> body; // throws or writes "FAIL:" lines on failure
};

int failures = 0;

void require(std::ostringstream& log, bool cond, const std::string& what) {
    if (!cond) log << "      FAIL: " << what << "\n";
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

// ---- criterion 1: Tango certification of the standard grid ----
void c1(std::ostringstream& log) {
    struct Point {
        std::uint32_t p, n, e;
        std::int64_t dz1;
    };
    // each (dz1) = p^n e (p^n e - 3) inf, cross-checked against 2g - 2
    std::vector<Point> grid = {{2, 1, 3, 18}, {2, 2, 1, 4}, {3, 1, 2, 18}, {3, 1, 3, 54}};
    for (auto& pt : grid) {
        auto t0 = std::chrono::steady_clock::now();
        TangoDatum datum = build_standard_datum(pt.p, pt.n, pt.e);
        TangoCertification res = certify_tango(datum);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::int64_t d = std::int64_t(datum.curve.curve_degree());
        require(log, pt.dz1 == d * (d - 3), "pinned (dz1) value vs formula");
        std::int64_t got = -1;
        for (auto& ck : res.full.checks)
            if (ck.id == "condition1.differential-valuation" && ck.status == Status::Pass)
                got = ck.witness["claims"][0]["lhs"].get<std::int64_t>();
        require(log, got == pt.dz1, "v_inf(dz1) == " + std::to_string(pt.dz1));
        std::int64_t g = std::int64_t(genus(datum.curve, smoothness_certify(datum.curve)));
        require(log, 2 * g - 2 == pt.dz1, "2g-2 cross-check");
        require(log, res.full.status() == Status::Pass, "full certification PASS");
        require(log, res.condition2.beta.has_value(), "beta extracted");
        if (res.condition2.beta) {
            FpRational qinv(FpPoly::constant(1, pt.p), FpPoly::variable("y", pt.p).pow(pt.e));
            require(log, *res.condition2.beta == qinv, "beta == Q^{-1} = y^{-e}");
        }
        require(log, dt < 10.0, "grid point under 10 s");
        log << "      (" << pt.p << "," << pt.n << "," << pt.e << "): (dz1) = " << d * (d - 3)
            << "*inf, " << dt << " s\n";
    }
}

// ---- criterion 2: the level-2 fixture fails condition (2) at depth 2 ----
void c2(std::ostringstream& log) {
    TangoDatum datum = build_twisted_fixture(2);
    require(log, datum.condition1.status() == Status::Pass, "condition (1) PASS");
    require(log, datum.D == DivisorOnC::infinity_times(1), "D = inf");

    TransitionData tr = extract_transition(datum);
    Chart u2 = datum.curve.chart_u2();
    auto root1 = fn_field_pth_root(tr.gamma, u2);
    require(log, root1.has_value(), "depth-1 root exists");
    if (root1) {
        FpRational expected(FpPoly::constant(1, 2), FpPoly::parse("1*x*y+1*y^2", 2));
        require(log, *root1 == expected, "depth-1 root is (xy+y^2)^{-1}");
        require(log, root1->pow(2) == tr.gamma, "verified by squaring");
        PthRootResult r2 = fn_field_pth_root_detail(*root1, u2, true);
        require(log, !r2.root.has_value(), "no depth-2 root");
        require(log, !r2.dg_residual.is_zero(), "depth-2 obstruction via dg != 0");
    }
    Condition2Result c2r = certify_condition2(datum, tr);
    require(log, c2r.cert.status() == Status::Fail, "condition (2) FAIL");
    require(log, c2r.fail_depth == 2, "failure at depth 2");
}

// ---- criterion 3: obstruction-degree formula regression ----
void c3(std::ostringstream& log) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n : {1u, 2u})
            for (std::uint32_t k = 1; k <= 8; ++k) {
                try {
                    obstruction_degree(p, n, k); // both routes compared inside
                } catch (const std::exception& ex) {
                    require(log, false, std::string("route mismatch: ") + ex.what());
                }
            }
    require(log, obstruction_degree(2, 1, 1) == 3, "spot value (2,1,1) = 3");
    require(log, obstruction_degree(3, 1, 1) == 5, "spot value (3,1,1) = 5");
}

// ---- criterion 4: intersection identities and parameter rejection ----
void c4(std::ostringstream& log) {
    std::vector<RaynaudParams> grid = {
        RaynaudParams::standard(2, 1, 3, 3), RaynaudParams::standard(2, 1, 6, 3),
        RaynaudParams::standard(3, 1, 2, 2), RaynaudParams::standard(3, 1, 4, 4),
        RaynaudParams::standard(2, 2, 5, 5), RaynaudParams::standard(5, 1, 2, 2),
        RaynaudParams::standard(5, 1, 3, 3), RaynaudParams::standard(5, 1, 6, 6),
    };
    for (auto& P : grid) {
        require(log, intersection_number(PicX::Stilde(), PicX::Stilde(), P).num == P.deg_N(),
                "S~^2 = deg N");
        require(log, intersection_number(PicX::Stilde(), PicX::Ttilde(P), P).num == 0,
                "S~ . T~ = 0");
    }
    bool rejected = false;
    try {
        RaynaudParams::standard(2, 1, 3, 4); // 4 does not divide 2 + 1
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    require(log, rejected, "invalid l rejected");
}

// ---- criterion 5: pushforward property suite ----
void c5(std::ostringstream& log) {
    std::vector<RaynaudParams> grid = {
        RaynaudParams::standard(3, 1, 2, 2), // l = 2
        RaynaudParams::standard(2, 1, 3, 3), // l = 3
        RaynaudParams::standard(2, 2, 5, 5), // l = 5
    };
    DivisorOnC Q = DivisorOnC::infinity_times(1);
    for (auto& P : grid) {
        for (std::uint64_t m = 0; m <= 3ull * P.l; ++m) {
            auto neg = push_psi_neg(m, P), negs = push_psi_neg(m + P.l, P);
            auto pos = push_psi_pos(m, P), poss = push_psi_pos(m + P.l, P);
            for (std::uint32_t i = 0; i < P.l; ++i) {
                require(log, negs[i] == neg[i] + PicPE::S() * -1, "neg twist compatibility");
                require(log, poss[i] == pos[i] + PicPE::S(), "pos twist compatibility");
            }
        }
        for (std::uint64_t m = 1; m <= 12; ++m) {
            auto dec = adjoint_decomposition(m, Q, P); // termwise check asserted inside
            auto pos = push_psi_pos(m, P);
            for (std::uint32_t i = 0; i < P.l; ++i)
                require(log, dec[i] == pos[i] + PicPE::pullback(Q),
                        "adjoint decomposition coincides with pushforward");
        }
    }
}

// ---- criterion 6: the Fujita pipeline for r = 1..10 ----
void c6(std::ostringstream& log) {
    for (std::uint32_t r = 1; r <= 10; ++r) {
        try {
            FujitaResult res = fujita_search(r);
            bool pass = res.cert.status() == Status::Pass;
            // the individually named hypotheses
            bool h0 = false, qb = false, eff = false;
            for (auto& c : res.cert.checks) {
                if (c.id == "basepoint.l0-h0") h0 = c.status == Status::Pass;
                if (c.id == "basepoint.q-bound") qb = c.status == Status::Pass;
                if (c.id == "basepoint.effectivity") eff = c.status == Status::Pass;
            }
            require(log, pass && h0 && qb && eff,
                    "r = " + std::to_string(r) + " PASS with all hypotheses");
            log << "      r=" << r << ": (p,n,k) = (" << res.params.p << "," << res.params.n
                << "," << res.params.k << "), curve degree "
                << ipow(res.params.p, res.params.n) * res.params.e << "\n";
        } catch (const std::exception& ex) {
            require(log, false, "r = " + std::to_string(r) + ": " + ex.what());
        }
    }
}

// ---- criterion 7: strong non-vanishing ----
void c7(std::ostringstream& log) {
    for (auto& [m, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 2}, {1, 3}, {2, 2}}) {
        NonvanishingResult res = certify_nonvanishing(m, p);
        require(log, res.cert.status() == Status::Pass,
                "(m,p) = (" + std::to_string(m) + "," + std::to_string(p) + ") PASS");
    }
    // exact decomposition at (1,2): dual O(2inf - N) + O(2inf + N) + 0,
    // i.e. R^1 = O(inf) + O(-5inf)
    NonvanishingResult nv = certify_nonvanishing(1, 2);
    bool shape = nv.r1_dual.terms.size() == 3 && nv.r1_dual.terms[0].sym_j == 0 &&
                 nv.r1_dual.terms[0].twist == DivisorOnC::infinity_times(-1) &&
                 nv.r1_dual.terms[1].sym_j == 0 &&
                 nv.r1_dual.terms[1].twist == DivisorOnC::infinity_times(5) &&
                 nv.r1_dual.terms[2].dropped;
    require(log, shape, "R^1 phi_* H^{-2} = O(inf) + O(-5inf) exactly");
    bool push_zero = false;
    for (auto& c : nv.cert.checks)
        if (c.id == "nonvanish.push-vanishing") push_zero = c.status == Status::Pass;
    require(log, push_zero, "phi_* H^{-2} = 0 via all-negative Sym exponents");
}

// ---- criterion 8: kernel property suites, 1000 cases each ----
void c8(std::ostringstream& log) {
    std::mt19937_64 rng(2026);
    auto random_poly = [&](std::uint32_t p, int max_terms, int max_deg) {
        FpPoly f(p);
        int terms = 1 + int(rng() % max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (auto& v : {"x", "y"}) {
                unsigned ex = unsigned(rng() % (max_deg + 1));
                if (ex) m = m * Monomial::var(v, ex);
            }
            f.insert_term(m, FpElem(rng() % p, p));
        }
        return f;
    };
    auto pick_p = [](int i) { return i % 3 == 0 ? 2u : (i % 3 == 1 ? 3u : 5u); };

    int bad = 0;
    for (int i = 0; i < 1000; ++i) { // ring axioms
        std::uint32_t p = pick_p(i);
        FpPoly a = random_poly(p, 4, 4), b = random_poly(p, 4, 4), c = random_poly(p, 4, 4);
        if (!(a + b == b + a) || !(a * b == b * a) || !((a + b) + c == a + (b + c)) ||
            !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c))
            ++bad;
    }
    require(log, bad == 0, "ring axioms (1000 cases)");

    bad = 0;
    for (int i = 0; i < 1000; ++i) { // frobenius / p-th root roundtrip + derivative kill
        std::uint32_t p = pick_p(i);
        FpPoly f = random_poly(p, 5, 6);
        FpPoly fp = f.frobenius_power(1);
        auto root = fp.p_th_root();
        if (!root || !(*root == f)) ++bad;
        if (!fp.derivative_opt("x").is_zero() || !fp.derivative_opt("y").is_zero()) ++bad;
    }
    require(log, bad == 0, "frobenius/p-th-root roundtrip and derivative kill (1000 cases)");

    // fn_field_pth_root roundtrip on constructed p-th powers
    TangoDatum datum = build_twisted_fixture(2);
    Chart u2 = datum.curve.chart_u2();
    bad = 0;
    for (int i = 0; i < 1000; ++i) {
        FpPoly h = random_poly(2, 3, 2);
        if (h.is_zero()) continue;
        FpPoly g_num = h.frobenius_power(1) + u2.f * random_poly(2, 2, 1);
        if (g_num.is_zero()) continue;
        auto root = fn_field_pth_root(FpRational(g_num), u2);
        if (!root) {
            ++bad;
            continue;
        }
        FpRational diff = root->pow(2) - FpRational(g_num);
        if (!nf_mod(diff.num(), u2.f).is_zero()) ++bad;
    }
    require(log, bad == 0, "fn_field_pth_root roundtrip (1000 cases)");

    // the nodal cubic must FAIL smoothness
    FpPoly F(5);
    F.insert_term(Monomial::var("Z", 1) * Monomial::var("Y", 2), FpElem(1, 5));
    F.insert_term(Monomial::var("X", 3), -FpElem(1, 5));
    F.insert_term(Monomial::var("X", 2) * Monomial::var("Z", 1), -FpElem(1, 5));
    Certificate sm = smoothness_certify(PlaneCurveFamily::custom(5, 1, 3, F));
    require(log, sm.status() == Status::Fail, "nodal cubic smoothness FAIL");
}

void run_criterion(const Criterion& c) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool threw = false;
    std::string what;
    try {
        c.body(log);
    } catch (const std::exception& ex) {
        threw = true;
        what = ex.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool failed = threw || log.str().find("FAIL:") != std::string::npos;
    bool overtime = dt > c.limit_seconds;
    if (failed || overtime) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)\n",
                failed || overtime ? "FAIL" : "PASS", c.id, c.name.c_str(), dt,
                c.limit_seconds);
    if (threw) std::printf("      FAIL: exception: %s\n", what.c_str());
    if (overtime) std::printf("      FAIL: over the runtime limit\n");
    std::fputs(log.str().c_str(), stdout);
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Tango certification of the standard grid", 40.0, c1},
        {2, "condition-(2) failure at depth 2 on the twisted fixture", 10.0, c2},
        {3, "obstruction-degree formula regression", 1.0, c3},
        {4, "intersection and disjointness identities", 1.0, c4},
        {5, "pushforward decomposition property suite", 1.0, c5},
        {6, "Fujita base-point pipeline for r = 1..10", 60.0, c6},
        {7, "strong non-vanishing pipeline", 30.0, c7},
        {8, "kernel property suites", 60.0, c8},
    };
    for (auto& c : criteria) run_criterion(c);
    std::printf("%s: %d of %zu criteria failed\n", failures ? "RED" : "GREEN", failures,
                criteria.size());
    return failures;
}
