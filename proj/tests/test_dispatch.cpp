#include "sl2kit/dispatch.hpp"

#include <doctest.h>

#include <cmath>

using namespace sl2kit;
using nlohmann::json;

namespace {

Response run(const char* text) { return dispatch(json::parse(text)); }

}  // namespace

TEST_CASE("valuate") {
    const auto r = run(R"({"command": "valuate", "p": 3, "x": "9/2"})");
    CHECK(r.ok);
    CHECK(r.result["value"] == 2);
    CHECK(run(R"({"command": "valuate", "p": 3, "x": 0})").result["value"] == "inf");
    CHECK(run(R"({"command": "valuate", "p": 2, "minpoly": [1, 1, 1], "x": ["3", "1/2"]})").result["value"] == -1);
    CHECK(run(R"({"command": "valuate", "p": 2, "minpoly": [1, 1, 1], "x": "γ/2 + 3"})").result["value"] == -1);
}

TEST_CASE("valuate on a ramified prime is a domain error with a witness") {
    const auto r = run(R"({"command": "valuate", "p": 2, "minpoly": [-2, 0, 1], "x": "γ"})");
    CHECK_FALSE(r.ok);
    CHECK(r.exit_class == ExitClass::DomainError);
    CHECK(r.error["code"] == "NotAValuation");
    const auto& w = r.error["witness"];
    CHECK(w["nu_x"] == 0);
    CHECK(w["nu_y"] == 0);
    CHECK(w["nu_xy"] == 1);
    const auto doc = r.to_json();
    CHECK(doc["status"] == "error");
    CHECK(doc.contains("diagnostics"));
}

TEST_CASE("tree commands") {
    CHECK(run(R"({"command": "tree-dist", "p": 3, "g": [["3", "0"], ["0", "1/3"]]})").result["distance"] == 2);
    CHECK(run(R"({"command": "tree-ball", "p": 2, "radius": 2})").result["count"] == 10);
    const auto act = run(R"({"command": "tree-act", "p": 2, "g": [["1", "1/2"], ["0", "1"]]})");
    // distance 2 from v0, but the same level: the offset 1/2 carries it
    CHECK(act.result["vertex"] == json::parse(R"({"n": 0, "b": ["1/2"]})"));
    CHECK(run(R"({"command": "tree-dist", "p": 2, "u": {"n": 3, "b": "5"}, "v": {"n": -1, "b": 0}})")
              .result["distance"] == 4);
}

TEST_CASE("hyperbolic commands") {
    const auto d = run(R"({"command": "hyp-dist", "p1": {"z": [0, 0], "t": 1}, "p2": {"z": [0, 0], "t": 4}})");
    CHECK(std::abs(d.result["distance"].get<double>() - std::log(4.0)) < 1e-11);
    const auto disp = run(R"({"command": "displacement", "g": [[2, 0], [0, "1/2"]]})");
    CHECK(disp.result["trees"][0]["distance"] == 2);
}

TEST_CASE("enumeration commands") {
    const auto e = run(R"({"command": "enumerate", "group": {"generators": [[[0, -1], [1, 0]], [[1, 1], [0, 1]]]}, "C": 0.1})");
    CHECK(e.result["count"] == 4);
    const auto p = run(
        R"({"command": "check-proper", "group": {"generators": [[[0, -1], [1, 0]], [[1, 1], [0, 1]]]}, "C": 0.1, "max_len": 4})");
    CHECK(p.exit_class == ExitClass::Ok);
    CHECK(p.result["contained"] == true);
    const auto over = run(
        R"({"command": "enumerate", "group": {"generators": [[[0, -1], [1, 0]]]}, "C": 9, "budget": 100})");
    CHECK(over.exit_class == ExitClass::DomainError);
    CHECK(over.error["code"] == "BudgetExceeded");
}

TEST_CASE("embedding and integrality commands") {
    const auto e = run(R"({"command": "embed", "group": {"generators": [[[0, -1], [1, 0]], [[1, 1], [0, 1]]]}, "samples": 30})");
    CHECK(e.ok);
    CHECK(e.result["checks"]["passed"] == true);
    CHECK(e.result["basis"].size() == 4);
    CHECK(run(R"({"command": "check-integral", "minpoly": [-5, 0, 1], "g": [["(1+γ)/2", -1], [1, 0]]})")
              .result["integral"] == true);
    const auto bad = run(R"({"command": "check-integral", "g": [[2, 0], [0, 1]]})");
    CHECK(bad.error["code"] == "DetNotOne");
}

TEST_CASE("sl2 commands") {
    const auto c = run(R"({"command": "classify", "basis": [[[0, 0], [1, 0]], [["1/2", 0], [0, "-1/2"]]]})");
    CHECK(c.ok);
    CHECK(c.result["conjugator"] == json::parse(R"([[["0"], ["1"]], [["1"], ["0"]]])"));
    const auto open = run(R"({"command": "classify", "basis": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]})");
    CHECK(open.error["code"] == "NotASubalgebra");
    CHECK(open.error.contains("witness"));
    CHECK(run(R"({"command": "normalizer", "which": "torus", "g": [[0, 2], ["-1/2", 0]]})").result["normalizes"] == true);
    CHECK(run(R"({"command": "normalizer", "which": "unipotent", "g": [[1, 0], [1, 1]]})").result["normalizes"] == false);
    const auto f = run(R"({"command": "factor-maximal", "g": [[0, -1], [1, 0]], "target": [[1, 0], [1, 1]]})");
    CHECK(f.result["verified"] == true);
}

TEST_CASE("usage errors") {
    CHECK(run(R"({"command": "nope"})").exit_class == ExitClass::UsageError);
    CHECK(run(R"({"command": "valuate", "p": 3})").exit_class == ExitClass::UsageError);
    CHECK(run(R"({"command": "valuate", "p": 4, "x": 1})").exit_class == ExitClass::DomainError);
    CHECK(run(R"([1, 2])").exit_class == ExitClass::UsageError);
    CHECK(command_names().size() == 13);
}

TEST_CASE("results re-parse and are deterministic") {
    for (const auto& name : command_names()) CHECK_FALSE(name.empty());
    const char* req = R"({"command": "tree-ball", "p": 3, "radius": 2})";
    const auto a = run(req).to_json().dump(), b = run(req).to_json().dump();
    CHECK(a == b);
    CHECK(json::parse(a)["result"]["count"] == 1 + 4 * 4);
}
