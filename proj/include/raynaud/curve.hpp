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

#ifndef RAYNAUD_CURVE_HPP
#define RAYNAUD_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raynaud/certificate.hpp"
#include "raynaud/divisor.hpp"
#include "raynaud/poly.hpp"
#include "raynaud/rational.hpp"
#include "raynaud/series.hpp"

namespace raynaud {

/// An affine chart of the plane curve with its dehomogenized equation.
struct Chart {
    std::string id;        // "U1" (X=1) or "U2" (Z=1)
    FpPoly f;              // chart equation
    std::string u, v;      // variable names, with u the first coordinate
    bool contains_infinity; // whether the distinguished point inf = (0,0) lies on it
    std::string u_def, v_def; // projective definitions, e.g. y1 = Y/X
};

/// A plane projective curve of degree p^n*e over F_p with the distinguished
/// point inf = [0:0:1]. The standard family is built from a homogeneous shape
/// Q(X,Y) of degree e with nonzero Y^e coefficient; a custom family supplies
/// the full homogeneous equation directly.
class PlaneCurveFamily {
  public:
    static PlaneCurveFamily standard(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                     const FpPoly& shapeQ);
    /// Default shape Q = Y^e.
    static PlaneCurveFamily standard(std::uint32_t p, std::uint32_t n, std::uint32_t e);
    static PlaneCurveFamily custom(std::uint32_t p, std::uint32_t n, std::uint32_t e,
                                   const FpPoly& F);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t e() const { return e_; }
    bool is_custom() const { return custom_; }
    const FpPoly& equation() const { return F_; }
    const FpPoly& shape() const { return Q_; }

    std::uint64_t frobenius_degree() const; // p^n
    std::uint64_t curve_degree() const;     // p^n * e = deg F

    Chart chart_u1() const; // X = 1, coordinates (y1, z1); misses inf
    Chart chart_u2() const; // Z = 1, coordinates (x, y); contains inf

    /// Default series precision 3*d*(d-3) + 10 for d = curve degree.
    std::int64_t default_precision() const;

  private:
    PlaneCurveFamily(std::uint32_t p, std::uint32_t n, std::uint32_t e, FpPoly Q, FpPoly F,
                     bool custom);
    std::uint32_t p_, n_, e_;
    FpPoly Q_;
    FpPoly F_;
    bool custom_;
};

/// Jacobian-criterion smoothness certificate over the three standard affine
/// charts (which cover the projective plane). PASS is backed by emptiness of
/// each chart's singular system; candidate singular loci are confirmed or
/// excluded through extensions of degree <= t_max, beyond which the verdict
/// degrades to INCONCLUSIVE, never to a wrong PASS.
Certificate smoothness_certify(const PlaneCurveFamily& C, int t_max = 6);

/// Smooth plane curve genus (d-1)(d-2)/2; requires a passing smoothness
/// certificate.
std::uint64_t genus(const PlaneCurveFamily& C, const Certificate& smoothness);

struct LinePoint {
    PointId point;
    std::uint64_t multiplicity;
};

/// Intersection of the curve with the line X = 0, as points with
/// multiplicities; irreducible factors of degree > 1 are reported as
/// conjugate clusters carrying their residue degree.
std::vector<LinePoint> line_intersection_at_X0(const PlaneCurveFamily& C);

/// The unique branch x(y) with x(0) = 0 solving the U2 chart equation,
/// computed by fixed-point iteration to precision T (exclusive).
LaurentSeries expand_at_infinity(const PlaneCurveFamily& C, std::int64_t T);

/// v_inf(g) for a rational function in the U2 coordinates, via substitution
/// of the branch series; nullopt (Indeterminate) when a substituted series is
/// zero up to precision, in which case the caller should raise T.
std::optional<std::int64_t> valuation_at_infinity(const FpRational& g,
                                                  const LaurentSeries& x_series);

/// v_inf(dg) computed as the valuation of d/dy of the substituted series.
std::optional<std::int64_t> differential_valuation_at_infinity(const FpRational& g,
                                                               const LaurentSeries& x_series);

/// Certifies that d(var) generates the differentials on the chart: the
/// partial of the chart equation in the other variable must be a unit. On the
/// infinity chart a PASS may be granted on a shrunk chart, with the excluded
/// locus recorded, as long as the distinguished point is not obstructed.
Certificate generates_omega_on_chart(const PlaneCurveFamily& C, const Chart& chart,
                                     const std::string& var, int t_max = 6);

/// Text fixture format: "p n e" header line, then either the shape polynomial
/// or the word "custom" followed by the full equation on the next line.
PlaneCurveFamily parse_curve_fixture(const std::string& text);
std::string curve_fixture_to_string(const PlaneCurveFamily& C);

} // namespace raynaud

#endif
