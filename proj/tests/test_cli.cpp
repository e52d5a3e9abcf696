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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "raynaud/certificate.hpp"
#include "raynaud/cli.hpp"
#include "raynaud/picard.hpp"

using namespace raynaud;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check-lift fixtures and exit codes") {
    CliRun bad = run({"check-lift", "--fixture", "2.4", "--p", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("condition (2) FAIL at depth 2") != std::string::npos);

    CliRun good = run({"check-lift", "--fixture", "2.3", "--p", "2", "--n", "1", "--e", "3"});
    CHECK(good.code == 0);
    CHECK(good.out.find("condition (2) PASS") != std::string::npos);

    CliRun unknown = run({"check-lift", "--fixture", "9.9", "--p", "2"});
    CHECK(unknown.code == 3);
}

TEST_CASE("certify-tango") {
    CliRun r = run({"certify-tango", "--p", "2", "--n", "1", "--e", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(C, z1, D) is 1-Tango data") != std::string::npos);

    // degenerate parameters are a usage error, not a crash
    CliRun degenerate = run({"certify-tango", "--p", "3", "--n", "1", "--e", "1"});
    CHECK(degenerate.code == 3);

    // custom shape from file
    std::string path = "shape_q.tmp.txt";
    {
        std::ofstream f(path);
        f << "1*X*Y^2+1*Y^3\n";
    }
    CliRun shaped = run({"certify-tango", "--p", "2", "--n", "1", "--e", "3", "--shape", path});
    CHECK(shaped.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("fujita writes a certificate file that round-trips") {
    std::string path = "fujita_test.cert.json";
    CliRun r = run({"fujita", "--r", "3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("p=2 n=2 k=1 l=5 e=5") != std::string::npos);

    std::ifstream f(path);
    REQUIRE(f.good());
    Json j = Json::parse(f);
    Certificate cert = Certificate::from_json(j);
    CHECK(cert.status() == Status::Pass);
    CHECK(cert.to_json() == j); // parse(print(certificate)) = certificate
    CHECK(recheck(cert));
    std::remove(path.c_str());
}

TEST_CASE("structured output round-trips through --json") {
    CliRun r = run({"surface-info", "--p", "2", "--n", "1", "--e", "3", "--l", "3", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    Certificate cert = Certificate::from_json(j);
    CHECK(cert.to_json() == j);
    CHECK(cert.status() == Status::Pass);
}

TEST_CASE("certificate JSON field order is fixed for diff-stability") {
    CliRun r = run({"surface-info", "--p", "2", "--n", "1", "--e", "3", "--l", "3", "--json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    std::vector<std::string> top;
    for (auto& [k, v] : j.items()) top.push_back(k);
    CHECK(top == std::vector<std::string>{"family", "checks", "conclusion"});
    for (auto& c : j["checks"]) {
        std::vector<std::string> keys;
        for (auto& [k, v] : c.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"id", "status", "witness", "anchor"});
    }
    std::vector<std::string> concl;
    for (auto& [k, v] : j["conclusion"].items()) concl.push_back(k);
    CHECK(concl == std::vector<std::string>{"statement", "status"});
}

TEST_CASE("surface classification: quasi-elliptic vs ample canonical") {
    auto type_of = [](std::vector<std::string> args) {
        args.push_back("--json");
        CliRun r = run(std::move(args));
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        for (auto& c : j["checks"])
            if (c["id"] == "surface.classification")
                return c["witness"]["type"].get<std::string>();
        return std::string();
    };
    CHECK(type_of({"surface-info", "--p", "2", "--n", "1", "--e", "3", "--l", "3"}) ==
          "quasi-elliptic");
    CHECK(type_of({"surface-info", "--p", "3", "--n", "1", "--e", "2", "--l", "2"}) ==
          "quasi-elliptic");
    CHECK(type_of({"surface-info", "--p", "2", "--n", "2", "--e", "5", "--l", "5"}) ==
          "omega_X ample");
}

TEST_CASE("pushforward table matches the library ladder") {
    CliRun r = run({"pushforward", "--m", "4", "--sign", "neg", "--l", "3", "--p", "2", "--n",
                    "1", "--e", "3", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    RaynaudParams P = RaynaudParams::standard(2, 1, 3, 3);
    auto expected = push_psi_neg(4, P);
    auto& classes = j["checks"][1]["witness"]["classes"];
    REQUIRE(classes.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(classes[i].get<std::string>() == expected[i].to_string());
}

TEST_CASE("usage errors exit 3") {
    CHECK(run({"pushforward", "--m", "1", "--sign", "sideways", "--l", "3"}).code == 3);
    CHECK(run({"no-such-command"}).code == 3);
    CHECK(run({"surface-info", "--p", "2", "--n", "1", "--e", "3", "--l", "4"}).code == 3);
    CHECK(run({"nonvanish", "--m", "1", "--p", "2", "--bogus"}).code == 3);
    // composite p rejected before dispatch
    CHECK(run({"certify-tango", "--p", "4", "--n", "1", "--e", "3"}).code == 3);
}

TEST_CASE("nonvanish and precision override") {
    CHECK(run({"nonvanish", "--m", "1", "--p", "3"}).code == 0);
    CHECK(run({"check-lift", "--fixture", "2.3", "--p", "2", "--precision", "80"}).code == 0);
    // too-low precision is a parameter error
    CHECK(run({"check-lift", "--fixture", "2.3", "--p", "2", "--precision", "4"}).code == 3);

    // environment variable as the default precision source
    setenv("RAYCERT_PRECISION", "90", 1);
    CHECK(run({"check-lift", "--fixture", "2.3", "--p", "2"}).code == 0);
    setenv("RAYCERT_PRECISION", "4", 1);
    CHECK(run({"check-lift", "--fixture", "2.3", "--p", "2"}).code == 3);
    unsetenv("RAYCERT_PRECISION");
}

TEST_CASE("exit codes mirror the conclusion status exactly") {
    CHECK(exit_code(Status::Pass) == 0);
    CHECK(exit_code(Status::Fail) == 1);
    CHECK(exit_code(Status::Inconclusive) == 2);
}

TEST_SUITE_END();
