#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polycirc/corpus.hpp"
#include "polycirc/engine.hpp"
#include "polycirc/graph.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"
#include "polycirc/report.hpp"

namespace polycirc {

/// 1-based disjoint cycle notation without fixed points, e.g. "(1,2)(3,4,5)";
/// the identity is "()".
std::string format_cycles(const Permutation& a);

/// Inverse of format_cycles. `line` and `first_column` locate `text` in its
/// enclosing document for error messages.
Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line = 1,
                         std::size_t first_column = 1);

/// Generator file: a header "n=<degree>" followed by one permutation per
/// line. Blank lines and '#' comments are ignored. Without generator lines
/// the result is the trivial group.
PermGroup parse_generators(std::string_view text);
std::string write_generators(const PermGroup& g);

/// graph6 / sparse6 without trailing newline. Readers accept an optional
/// ">>graph6<<" / ">>sparse6<<" header and one trailing newline.
std::string write_graph6(const Graph& g);
Graph read_graph6(std::string_view bytes);
std::string write_sparse6(const Graph& g);
Graph read_sparse6(std::string_view bytes);
/// Dispatches on the leading ':' of sparse6.
Graph read_graph(std::string_view bytes);

struct CertificateDocument {
  Certificate certificate;
  std::size_t n = 0;
  std::size_t valency = 0;
  bool verified = false;
  std::string tool_version;
};

nlohmann::json certificate_to_json(const CertificateDocument& doc);
/// Throws ParseError (line 1, column 1) naming the offending field.
CertificateDocument certificate_from_json(const nlohmann::json& j);
CertificateDocument parse_certificate(std::string_view text);

/// {id, family, params, n, valency, group_order, seed}, plus "note" when set.
nlohmann::json manifest_entry(const CorpusInstance& instance);

nlohmann::json report_to_json(const ProofReport& report);

/// Library version baked in at build time.
std::string_view tool_version();

}  // namespace polycirc
