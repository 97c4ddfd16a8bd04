#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tuttekit/arithmetic.hpp"
#include "tuttekit/arrangement.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// {"dim": 2, "hyperplanes": [{"normal": ["1", "-2/3"], "offset": "1/2"}, ...]}
/// with optional "label" and "characteristic". Entries may be strings or
/// integers. Throws Error(parse).
Arrangement parse_arrangement(const std::string& text);
Arrangement read_arrangement(const std::string& path);
std::string arrangement_to_json(const Arrangement& a);

/// "dim D" followed by one line of D integers per vector; '#' starts a comment.
VectorConfig parse_vector_config(const std::string& text);
VectorConfig read_vector_config(const std::string& path);

/// One "i j" edge per line, 1-indexed. Returns the vertex count (the largest
/// index seen) and 0-indexed edges.
std::pair<std::size_t, std::vector<Edge>> parse_graph(const std::string& text);
std::pair<std::size_t, std::vector<Edge>> read_graph(const std::string& path);

std::string read_file(const std::string& path);

enum class OutputFormat { text, structured, latex };
OutputFormat output_format_from_name(const std::string& name);

/// Metadata echoed by structured output.
struct ResultContext {
  std::string what;    // "tutte", "char", ...
  std::string input;   // file name or family description
  std::string method;
  std::size_t rank = 0;
  std::size_t n = 0;
};

/// text: canonical grammar; latex: LaTeX; structured: one JSON record with the
/// input echo, method, rank, n, the polynomial and its term list.
std::string format_polynomial(const MultiPoly& p, OutputFormat format, const ResultContext& context);

/// Flat key -> value record. Text is "key: value" lines.
std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields, OutputFormat format,
                          const ResultContext& context);

}  // namespace tuttekit
