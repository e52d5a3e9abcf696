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

#include "raynaud/certificate.hpp"

#include <sstream>
#include <stdexcept>

namespace raynaud {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Status status_from_string(const std::string& s) {
    if (s == "PASS") return Status::Pass;
    if (s == "FAIL") return Status::Fail;
    if (s == "INCONCLUSIVE") return Status::Inconclusive;
    throw std::invalid_argument("unknown status: " + s);
}

Status Certificate::status() const {
    bool inconclusive = false;
    for (auto& c : checks) {
        if (c.status == Status::Fail) return Status::Fail;
        if (c.status == Status::Inconclusive) inconclusive = true;
    }
    return inconclusive ? Status::Inconclusive : Status::Pass;
}

CertCheck& Certificate::add(const std::string& id, Status st, const std::string& anchor) {
    checks.push_back(CertCheck{id, st, Json::object(), anchor});
    return checks.back();
}

CertCheck& Certificate::add_int_claim(const std::string& id, const std::string& anchor,
                                      const std::string& rel, std::int64_t lhs,
                                      std::int64_t rhs) {
    CertCheck& c = add(id, Status::Pass, anchor);
    claim_int(c, rel, lhs, rhs);
    return c;
}

void Certificate::merge(const std::string& prefix, const Certificate& sub) {
    for (auto& c : sub.checks) {
        CertCheck copy = c;
        if (!prefix.empty()) copy.id = prefix + "." + c.id;
        checks.push_back(std::move(copy));
    }
}

namespace {

bool eval_rel(const std::string& rel, std::int64_t lhs, std::int64_t rhs) {
    if (rel == "eq") return lhs == rhs;
    if (rel == "ne") return lhs != rhs;
    if (rel == "ge") return lhs >= rhs;
    if (rel == "gt") return lhs > rhs;
    if (rel == "le") return lhs <= rhs;
    if (rel == "lt") return lhs < rhs;
    throw std::invalid_argument("unknown claim relation: " + rel);
}

} // namespace

void claim_int(CertCheck& check, const std::string& rel, std::int64_t lhs, std::int64_t rhs) {
    bool holds = eval_rel(rel, lhs, rhs);
    Json claim;
    claim["rel"] = rel;
    claim["lhs"] = lhs;
    claim["rhs"] = rhs;
    claim["holds"] = holds;
    if (!check.witness.contains("claims")) check.witness["claims"] = Json::array();
    check.witness["claims"].push_back(claim);
    if (!holds) check.status = Status::Fail;
}

bool recheck(const Certificate& cert) {
    for (auto& c : cert.checks) {
        if (!c.witness.contains("claims")) continue;
        bool all_hold = true;
        for (auto& claim : c.witness["claims"]) {
            bool holds = eval_rel(claim.at("rel").get<std::string>(),
                                  claim.at("lhs").get<std::int64_t>(),
                                  claim.at("rhs").get<std::int64_t>());
            if (holds != claim.at("holds").get<bool>()) return false;
            all_hold = all_hold && holds;
        }
        if (!all_hold && c.status == Status::Pass) return false;
    }
    return true;
}

Json Certificate::to_json() const {
    Json j;
    j["family"] = family;
    j["checks"] = Json::array();
    for (auto& c : checks) {
        Json jc;
        jc["id"] = c.id;
        jc["status"] = to_string(c.status);
        jc["witness"] = c.witness;
        jc["anchor"] = c.anchor;
        j["checks"].push_back(jc);
    }
    Json concl;
    concl["statement"] = conclusion;
    concl["status"] = to_string(status());
    j["conclusion"] = concl;
    return j;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate cert;
    cert.family = j.at("family");
    for (auto& jc : j.at("checks")) {
        CertCheck c;
        c.id = jc.at("id").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        c.witness = jc.at("witness");
        c.anchor = jc.at("anchor").get<std::string>();
        cert.checks.push_back(std::move(c));
    }
    cert.conclusion = j.at("conclusion").at("statement").get<std::string>();
    return cert;
}

bool Certificate::operator==(const Certificate& o) const {
    return to_json() == o.to_json();
}

int exit_code(Status s) {
    switch (s) {
        case Status::Pass: return 0;
        case Status::Fail: return 1;
        case Status::Inconclusive: return 2;
    }
    return 3;
}

std::string Certificate::render_text() const {
    std::ostringstream os;
    if (!family.empty()) os << "family: " << family.dump() << "\n";
    for (auto& c : checks) {
        os << "  [" << to_string(c.status) << "] " << c.id;
        if (!c.anchor.empty()) os << "  -- " << c.anchor;
        os << "\n";
        if (c.witness.contains("note"))
            os << "        " << c.witness["note"].get<std::string>() << "\n";
    }
    os << "conclusion: [" << to_string(status()) << "] " << conclusion << "\n";
    return os.str();
}

} // namespace raynaud
