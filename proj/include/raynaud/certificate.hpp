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

#ifndef RAYNAUD_CERTIFICATE_HPP
#define RAYNAUD_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace raynaud {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

using Json = nlohmann::ordered_json;

/// One verified claim. The witness carries the exact values needed to
/// re-verify: integer relations live under witness["claims"], each as
/// {rel, lhs, rhs, holds}, free-form context next to them.
struct CertCheck {
    std::string id;
    Status status = Status::Pass;
    Json witness = Json::object();
    std::string anchor; // the mathematical statement this check instantiates
};

/// Structured verdict emitted by every certifier: family parameters, an
/// ordered list of checks, and a conclusion whose status is PASS only when
/// every check passes (FAIL dominates INCONCLUSIVE).
class Certificate {
  public:
    Json family = Json::object();
    std::vector<CertCheck> checks;
    std::string conclusion;

    Status status() const;

    CertCheck& add(const std::string& id, Status st, const std::string& anchor);
    /// Convenience: records an integer relation claim on a fresh check.
    CertCheck& add_int_claim(const std::string& id, const std::string& anchor,
                             const std::string& rel, std::int64_t lhs, std::int64_t rhs);
    /// Append a sub-certificate's checks under an id prefix.
    void merge(const std::string& prefix, const Certificate& sub);

    Json to_json() const;
    static Certificate from_json(const Json& j);

    bool operator==(const Certificate& o) const;

    std::string render_text() const;
};

/// Adds {rel, lhs, rhs, holds} to check.witness["claims"] and downgrades the
/// check (and so the certificate) to FAIL when the relation does not hold.
void claim_int(CertCheck& check, const std::string& rel, std::int64_t lhs, std::int64_t rhs);

/// Re-verify every stored integer/bool claim of a certificate from its
/// witnesses alone; true when every check's recorded status is reproduced.
bool recheck(const Certificate& cert);

/// Exit-code mapping used by the command line front end.
int exit_code(Status s);

} // namespace raynaud

#endif
