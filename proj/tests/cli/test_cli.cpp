#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"

#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = psalg::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PSALG_TEST_DATA) + "/" + name; }

json dims(const std::vector<int>& d) { return json(d); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tutte") {
    auto r = run({"tutte", data("k3.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) ==
          json::parse(R"({"terms":[{"x":2,"y":0,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]})"));
    r = run({"tutte", data("edgeless.json")});
    CHECK(json::parse(r.out) == json::parse(R"({"terms":[{"x":0,"y":0,"c":"1"}]})"));
    r = run({"tutte", data("malformed.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("line") != std::string::npos);
    r = run({"--order", "2", "0", "1", "tutte", "--verify", data("k3.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verify"]["agree"] == true);
    r = run({"--order", "0", "0", "1", "tutte", "--verify", data("k3.json")});
    CHECK(r.code == 1);
    r = run({"--table", "tutte", data("k3.json")});
    CHECK(r.out.find("x^2 + x + y") != std::string::npos);
}

TEST_CASE("hilbert") {
    auto r = run({"hilbert", data("k3.json")});
    CHECK(json::parse(r.out)["dims"] == dims({1, 2, 3, 1}));
    r = run({"hilbert", "--kind", "tree", "--verify", data("k3.json")});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dims"] == dims({1, 2}));
    CHECK(j["verify"]["agree"] == true);
    r = run({"hilbert", "--kind", "tlabel", "--t", "2", "--verify", data("k3.json")});
    CHECK(r.code == 0);
    const json labelled = json::parse(r.out);
    int total = 0;
    for (const auto& d : labelled["dims"]) total += d.get<int>();
    CHECK(total == 19);
    r = run({"hilbert", "--kind", "tree", data("k3_and_edge.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("connected") != std::string::npos);
    CHECK(run({"hilbert", "--kind", "tlabel", "--t", "0", data("k3.json")}).code == 2);
    CHECK(run({"hilbert", "--kind", "cube", data("k3.json")}).code == 2);
    r = run({"hilbert", "-"}, R"({"n":2,"edges":[[0,1]]})");
    CHECK(json::parse(r.out)["dims"] == dims({1, 1}));
}

TEST_CASE("reconstruct consumes hilbert output") {
    const auto h = run({"hilbert", "--kind", "tlabel", "--t", "3", data("k3.json")});
    auto r = run({"reconstruct", "-", "--t", "3", "--n", "3"}, h.out);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(run({"tutte", data("k3.json")}).out));
    r = run({"reconstruct", "-", "--t", "2", "--n", "3"}, h.out);
    CHECK(r.code == 1);
    r = run({"reconstruct", data("tampered_hilbert.json"), "--t", "3", "--n", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("inconsistent") != std::string::npos);
    CHECK(run({"reconstruct", data("tampered_hilbert.json"), "--t", "3"}).code == 2);
}

TEST_CASE("hyper") {
    auto r = run({"hyper", data("triple.json")});
    CHECK(json::parse(r.out) ==
          json::parse(R"({"terms":[{"x":2,"y":0,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]})"));
    r = run({"hyper", "--action", "trees", data("triple.json")});
    CHECK(json::parse(r.out)["count"] == 3);
    CHECK(json::parse(r.out)["trees"].size() == 3);
    r = run({"hyper", "--action", "forests", data("triple.json")});
    CHECK(json::parse(r.out)["count"] == 7);
    r = run({"hyper", "--action", "hilbert", "--seed", "4", data("triple.json")});
    CHECK(json::parse(r.out)["dims"] == dims({1, 2, 3, 1}));
    r = run({"hyper", "--action", "check", data("triple.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    r = run({"hyper", data("bad_hyperedge.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("edges[1]") != std::string::npos);
    CHECK(run({"hyper", "--trials", "0", data("triple.json")}).code == 2);
}

TEST_CASE("whitney") {
    auto r = run({"whitney", data("k4_minus_edge.json"), "--op", "twist", "--vertices", "1", "2", "--side", "0", "1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["same_cycle_space"] == true);
    CHECK(j["report"]["forest_series_equal"] == true);
    r = run({"whitney", data("k3.json"), "--op", "cleave", "--vertices", "0", "--side", "0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("invalid operation site") != std::string::npos);
    r = run({"whitney", data("k3_and_edge.json"), "--op", "identify", "--vertices", "2", "3"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["graph"]["n"] == 4);
    CHECK(j["report"]["forest_series_equal"] == true);
    CHECK(run({"whitney", data("k3.json"), "--op", "twist", "--vertices", "1", "2"}).code == 2);
}

TEST_CASE("conjecture") {
    auto r = run({"conjecture", data("k3_pendant.json"), data("k3.json")});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["matroids"] == "isomorphic");
    CHECK(j["tree_series_equal"] == true);
    CHECK(j["verdict"] == "consistent");
    r = run({"conjecture", data("k3.json"), data("p4.json")});
    j = json::parse(r.out);
    CHECK(j["matroids"] == "different");
    CHECK(j["tree_series_a"] == dims({1, 2}));
    CHECK(j["tree_series_b"] == dims({1}));
    r = run({"conjecture", data("k3.json"), data("k3.json")});
    CHECK(json::parse(r.out)["verdict"] == "consistent");
    r = run({"conjecture", data("k3.json"), data("k3_and_edge.json")});
    CHECK(r.code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"tutte"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

}
