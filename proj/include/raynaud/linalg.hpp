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

#ifndef RAYNAUD_LINALG_HPP
#define RAYNAUD_LINALG_HPP

#include <optional>
#include <vector>

#include "raynaud/fp.hpp"

namespace raynaud {

/// Gaussian elimination over F_p. Returns one solution of A x = b, or
/// NoSolution (nullopt) when the system is inconsistent. Throws on dimension
/// mismatch. Free variables are set to zero.
std::optional<std::vector<FpElem>> solve_linear_fp(std::vector<std::vector<FpElem>> A,
                                                   std::vector<FpElem> b);

} // namespace raynaud

#endif
