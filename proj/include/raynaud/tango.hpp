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

#ifndef RAYNAUD_TANGO_HPP
#define RAYNAUD_TANGO_HPP

#include <optional>

#include "raynaud/certificate.hpp"
#include "raynaud/curve.hpp"
#include "raynaud/divisor.hpp"
#include "raynaud/rational.hpp"

namespace raynaud {

/// Transition data a custom family must declare; the standard family derives
/// its own. All functions live in the U2 coordinates (x, y).
struct TransitionSpec {
    FpRational z2, alpha, gamma;
};

/// A candidate triple (C, f, D) with (df) = p^n D. `condition1` certifies the
/// divisor identity; the branch series at infinity is kept for later
/// valuation work.
struct TangoDatum {
    PlaneCurveFamily curve;
    FpRational f_z1; // the rational function, z1 = 1/x in U2 coordinates
    std::uint32_t n;
    DivisorOnC D;
    std::string bundle; // tag O(D)
    Certificate condition1;
    LaurentSeries branch; // x(y) at infinity, precision as used by the checks
    std::optional<TransitionSpec> declared; // custom families declare z2/alpha/gamma
};

/// Builds the standard-family datum with D = e(p^n e - 3) inf and certifies
/// condition (1): smoothness, the line intersection at X=0, dz1 generating on
/// U1, the differential valuation p^n deg D at infinity, and the degree
/// identity with 2g-2. Throws for the degenerate degree p^n e <= 3.
TangoDatum build_standard_datum(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                const FpPoly& shapeQ, std::int64_t precision_override = 0);
TangoDatum build_standard_datum(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                std::int64_t precision_override = 0);

/// The level-2 fixture curve X^{p^2-p} Y^p + Y^{p^2} - X^{p^2-1} Y = Z^{p^2-1} X
/// whose transition constant has a p-th root but no p^2-th root.
TangoDatum build_twisted_fixture(std::uint32_t p, std::int64_t precision_override = 0);

/// The rank-two bundle's transition data (alpha, gamma) with the relation
/// z1 = alpha^{p^n} z2 + gamma verified exactly modulo the chart equation.
struct TransitionData {
    FpRational alpha, gamma, z2;
    std::optional<FpRational> beta; // p^n-th root of gamma once certified
    Certificate relation;
};

TransitionData extract_transition(const TangoDatum& datum);

/// Root extraction result: `root` empty means NoRoot, decided by the exact
/// test dg = 0 on the curve whose cleared residual is reported.
struct PthRootResult {
    std::optional<FpRational> root;
    FpPoly dg_residual; // NF of the cleared differential test, zero iff dg = 0
    bool via_fast_path;
};

/// Decides g in K(C)^p over the chart and extracts the root: syntactic
/// exponent division when num/den are literal p-th powers, otherwise the
/// dg = 0 membership test followed by an F_p-linear solve for the root in
/// canonical normal form. Throws on degree-bound overflow.
PthRootResult fn_field_pth_root_detail(const FpRational& g, const Chart& chart,
                                       bool assume_irreducible = false);
std::optional<FpRational> fn_field_pth_root(const FpRational& g, const Chart& chart);

struct Condition2Result {
    Certificate cert;
    std::optional<FpRational> beta;
    int fail_depth = -1; // depth at which extraction stopped; -1 if none
};

/// Certifies condition (2): gamma must have a p^n-th root in K(C), found by n
/// successive p-th root extractions, with beta regular on the chart overlap
/// after the recorded shrinking.
Condition2Result certify_condition2(const TangoDatum& datum, const TransitionData& transition);

/// The quotient line bundle L0 = L(D0) with D0 = -min(a, b, 0) inf from the
/// valuations a = v_inf(beta), b = v_inf(alpha).
struct QuotientBundleData {
    DivisorOnC D0;
    std::string L0; // tag L(D0)
    std::int64_t L0_degree;
    int h0_lower_bound;
    Certificate cert;
};

QuotientBundleData build_quotient_bundle(const TangoDatum& datum,
                                         const TransitionData& transition);

/// Convenience: full pipeline over an already-built datum; merges the
/// condition (1), transition, condition (2) and quotient-bundle checks.
struct TangoCertification {
    TangoDatum datum;
    std::optional<TransitionData> transition;
    Condition2Result condition2;
    std::optional<QuotientBundleData> quotient;
    Certificate full;
};

TangoCertification certify_tango(const TangoDatum& datum);

} // namespace raynaud

#endif
