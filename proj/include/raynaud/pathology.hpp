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

#ifndef RAYNAUD_PATHOLOGY_HPP
#define RAYNAUD_PATHOLOGY_HPP

#include <cstdint>

#include "raynaud/certificate.hpp"
#include "raynaud/divisor.hpp"
#include "raynaud/picard.hpp"

namespace raynaud {

/// deg(omega_C (x) L0^{-(p^n-1-d)}(-(p^n+l)N)) in the convenient
/// parametrization l = p^n + 1, e = k l, d = 1, computed twice: by the
/// divisor ledger from first principles and by the closed form
/// k(P(P+1)k - 3 - (P-2)(P+1)) with P = p^n. Throws on route mismatch.
std::int64_t obstruction_degree(std::uint32_t p, std::uint32_t n, std::uint32_t k);

enum class BasePointMode { Ample, Adjoint };

/// Certifies that phi^{-1}(P) cap T~ is a base point of O(m S~ + phi^*(Q+P))
/// (ample mode) or of the adjoint O(K_X + m S~ + phi^*(Q+P)) (adjoint mode)
/// for generic P: Tango certification of the base curve, the quotient bundle
/// L0 with its h^0 >= 2 bound, the twist bound q < p^n, effectivity of the
/// obstruction bundle, and the module action table along T.
Certificate certify_base_point(const RaynaudParams& P, std::uint64_t m, const DivisorOnC& Qdiv,
                               BasePointMode mode);

struct FujitaParams {
    std::uint32_t r = 1, p = 2, n = 1, k = 1, l = 3, e = 3;
    std::uint64_t d = 1;
    std::int64_t adjoint_twist_q = 0; // p^n - 1 - d
    DivisorOnC Qdiv;
};

struct FujitaResult {
    FujitaParams params;
    Certificate cert;
};

/// Searches (p, n, k) in lexicographic order, pruning candidates with curve
/// degree p^n e > budget, for l = p^n + 1 > r and obstruction degree > r;
/// assembles Q = (r-1) inf (or inf when r = 1) and runs the adjoint base-point
/// certifier; the produced A = S~ + phi^* Q0 carries a numerical positivity
/// witness. Throws "no desk-scale witness" when the budget is exhausted.
FujitaResult fujita_search(std::uint32_t r, std::uint32_t budget = 64);

struct NonvanishingResult {
    RaynaudParams params;
    SheafOnC r1_dual;
    Certificate cert;
};

/// For Frobenius height m over F_p: picks n = m, l = p^m + 1, the smallest k
/// with deg N > p^m, Q = inf, and certifies phi_* H^{-p^m} = 0 (all symmetric
/// power exponents negative) and the effective sub-bundle O((1-lq)N - p^m Q)
/// of R^1 phi_* H^{-p^m}, so H^1(X, H^{-p^m}) != 0 through the Leray sequence.
NonvanishingResult certify_nonvanishing(std::uint32_t m, std::uint32_t p);

} // namespace raynaud

#endif
