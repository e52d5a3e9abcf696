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

#ifndef RAYNAUD_CLI_HPP
#define RAYNAUD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace raynaud {

/// Command line dispatch. Exit codes: 0 = conclusion PASS, 1 = FAIL,
/// 2 = INCONCLUSIVE, 3 = usage or parameter error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace raynaud

#endif
