#include "psalg/io.hpp"

#include <fstream>
#include <limits>

namespace psalg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& message) {
    throw ParseError(source + ": field '" + field + "': " + message);
}

const json& require(const json& j, const std::string& source, const char* key) {
    if (!j.is_object()) fail(source, "<root>", "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(source, key, "missing");
    return *it;
}

std::size_t as_index(const json& j, const std::string& source, const std::string& field) {
    if (!j.is_number_integer()) fail(source, field, "expected a nonnegative integer, got " + j.dump());
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    const auto v = j.get<std::int64_t>();
    if (v < 0) fail(source, field, "expected a nonnegative integer, got " + j.dump());
    return static_cast<std::size_t>(v);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Multigraph graph_from_json(const json& j, const std::string& source) {
    const std::size_t n = as_index(require(j, source, "n"), source, "n");
    const json& edges = require(j, source, "edges");
    if (!edges.is_array()) fail(source, "edges", "expected an array");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2) fail(source, field, "expected [u, v], got " + e.dump());
        Edge ed{as_index(e[0], source, field + "[0]"), as_index(e[1], source, field + "[1]")};
        if (ed.u >= n || ed.v >= n) fail(source, field, "vertex out of range for n = " + std::to_string(n));
        if (ed.u == ed.v) fail(source, field, "loops are not allowed");
        out.push_back(ed);
    }
    return Multigraph(n, std::move(out));
}

json to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j, const std::string& source) {
    const std::size_t n = as_index(require(j, source, "n"), source, "n");
    const json& edges = require(j, source, "edges");
    if (!edges.is_array()) fail(source, "edges", "expected an array");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array()) fail(source, field, "expected an array of vertices, got " + e.dump());
        if (e.size() < 2) fail(source, field, "hyperedges need at least 2 vertices, got " + e.dump());
        std::vector<std::size_t> verts;
        for (std::size_t k = 0; k < e.size(); ++k) {
            std::size_t v = as_index(e[k], source, field + "[" + std::to_string(k) + "]");
            if (v >= n) fail(source, field, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
            verts.push_back(v);
        }
        out.push_back(std::move(verts));
    }
    try {
        return Hypergraph(n, std::move(out));
    } catch (const std::invalid_argument& e) {
        fail(source, "edges", e.what());
    }
}

json to_json(const Hypergraph& h) {
    return {{"n", h.vertex_count()}, {"edges", h.edges()}};
}

BivariatePolynomial polynomial_from_json(const json& j, const std::string& source) {
    const json& terms = require(j, source, "terms");
    if (!terms.is_array()) fail(source, "terms", "expected an array");
    BivariatePolynomial p;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string field = "terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        const std::size_t x = as_index(require(t, source, "x"), source, field + ".x");
        const std::size_t y = as_index(require(t, source, "y"), source, field + ".y");
        const json& c = require(t, source, "c");
        BigInt coeff;
        if (c.is_string()) {
            if (coeff.set_str(c.get<std::string>(), 10) != 0) fail(source, field + ".c", "not a decimal integer");
        } else if (c.is_number_integer()) {
            coeff = BigInt(c.dump());
        } else {
            fail(source, field + ".c", "expected a decimal string");
        }
        if (x > std::numeric_limits<unsigned>::max() || y > std::numeric_limits<unsigned>::max())
            fail(source, field, "degree too large");
        p.add_term(static_cast<unsigned>(x), static_cast<unsigned>(y), coeff);
    }
    return p;
}

json to_json(const BivariatePolynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"x", it->first.first}, {"y", it->first.second}, {"c", it->second.get_str()}});
    return {{"terms", terms}};
}

HilbertSeries hilbert_from_json(const json& j, const std::string& source) {
    const json& dims = require(j, source, "dims");
    if (!dims.is_array()) fail(source, "dims", "expected an array");
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < dims.size(); ++k)
        out.push_back(as_index(dims[k], source, "dims[" + std::to_string(k) + "]"));
    return HilbertSeries(std::move(out));
}

json to_json(const HilbertSeries& hs) { return {{"dims", hs.dims()}}; }

Multigraph read_graph_file(const std::filesystem::path& path) {
    return graph_from_json(read_json_file(path), path.string());
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path) {
    return hypergraph_from_json(read_json_file(path), path.string());
}

HilbertSeries read_hilbert_file(const std::filesystem::path& path) {
    return hilbert_from_json(read_json_file(path), path.string());
}

}  // namespace psalg
