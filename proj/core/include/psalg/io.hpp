#ifndef PSALG_IO_HPP
#define PSALG_IO_HPP

#include "psalg/graphs.hpp"
#include "psalg/hypergraphs.hpp"
#include "psalg/polynomial.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace psalg {

/// Malformed input. what() names the file and the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON file; syntax errors report line and column.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// {"n": <int>, "edges": [[u, v], ...]}
Multigraph graph_from_json(const nlohmann::json& j, const std::string& source = "graph");
nlohmann::json to_json(const Multigraph& g);

/// {"n": <int>, "edges": [[v, ...], ...]}
Hypergraph hypergraph_from_json(const nlohmann::json& j, const std::string& source = "hypergraph");
nlohmann::json to_json(const Hypergraph& h);

/// {"terms": [{"x": i, "y": j, "c": "<decimal>"}, ...]}, highest term first.
BivariatePolynomial polynomial_from_json(const nlohmann::json& j, const std::string& source = "polynomial");
nlohmann::json to_json(const BivariatePolynomial& p);

/// {"dims": [d0, d1, ...]}
HilbertSeries hilbert_from_json(const nlohmann::json& j, const std::string& source = "hilbert");
nlohmann::json to_json(const HilbertSeries& hs);

Multigraph read_graph_file(const std::filesystem::path& path);
Hypergraph read_hypergraph_file(const std::filesystem::path& path);
HilbertSeries read_hilbert_file(const std::filesystem::path& path);

}  // namespace psalg

#endif  // PSALG_IO_HPP
