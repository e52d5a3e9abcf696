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

#ifndef RAYNAUD_ZEROSET_HPP
#define RAYNAUD_ZEROSET_HPP

#include <string>
#include <vector>

#include "raynaud/poly.hpp"

namespace raynaud {

enum class ZeroSetKind { Empty, NonEmpty, Unknown };

struct ZeroSetResult {
    ZeroSetKind kind;
    /// For NonEmpty: a description of one common zero (rational point or a
    /// conjugate cluster given by irreducible polynomials). For Unknown: the
    /// reason the decision was abandoned.
    std::string witness;
};

/// Decides whether the affine system {f_i = 0} in at most two variables has a
/// common zero over the algebraic closure of F_p. The decision procedure in
/// order: constant shortcut, single-variable gcd, monomial case split,
/// resultant elimination with candidates confirmed or excluded by gcds over
/// F_{p^t} for t <= t_max. Candidates only reachable through extensions of
/// degree > t_max yield Unknown, never a wrong Empty.
ZeroSetResult common_zero_set(const std::vector<FpPoly>& system,
                              const std::vector<std::string>& vars, int t_max);

} // namespace raynaud

#endif
