#include "tuttekit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tuttekit/error.hpp"

namespace tuttekit {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

Rational entry_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw Error(ErrorCode::parse, "expected a rational given as a string or an integer, got " + v.dump());
}

std::string strip_comment(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arrangement parse_arrangement(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("malformed arrangement: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("hyperplanes")) {
      throw Error(ErrorCode::parse, "arrangement needs 'dim' and 'hyperplanes'");
    }
    const long long dim = doc.at("dim").get<long long>();
    if (dim < 0) throw Error(ErrorCode::parse, "negative dimension");
    const std::uint64_t p = doc.value("characteristic", 0ULL);
    std::vector<Hyperplane> hs;
    for (const auto& h : doc.at("hyperplanes")) {
      const auto& normal_json = h.at("normal");
      if (!normal_json.is_array() || normal_json.size() != static_cast<std::size_t>(dim)) {
        throw Error(ErrorCode::parse, "normal length differs from dim");
      }
      std::vector<Rational> normal;
      for (const auto& v : normal_json) normal.push_back(entry_value(v));
      const Rational offset = h.contains("offset") ? entry_value(h.at("offset")) : Rational(0);
      try {
        hs.emplace_back(std::move(normal), offset, p);
      } catch (const Error& e) {
        throw Error(ErrorCode::parse, e.what());
      }
    }
    return Arrangement(static_cast<std::size_t>(dim), std::move(hs), doc.value("label", std::string()), p);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("malformed arrangement: ") + e.what());
  }
}

Arrangement read_arrangement(const std::string& path) { return parse_arrangement(read_file(path)); }

std::string arrangement_to_json(const Arrangement& a) {
  ordered_json doc;
  doc["dim"] = a.dim();
  if (!a.label().empty()) doc["label"] = a.label();
  if (a.characteristic() != 0) doc["characteristic"] = a.characteristic();
  doc["hyperplanes"] = json::array();
  for (const auto& h : a.hyperplanes()) {
    ordered_json entry;
    entry["normal"] = json::array();
    for (const auto& v : h.normal()) entry["normal"].push_back(to_string(v));
    entry["offset"] = to_string(h.offset());
    doc["hyperplanes"].push_back(entry);
  }
  return doc.dump(2);
}

VectorConfig parse_vector_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  VectorConfig c;
  bool have_dim = false;
  while (std::getline(in, line)) {
    std::istringstream fields(strip_comment(line));
    std::string word;
    if (!(fields >> word)) continue;
    if (!have_dim) {
      long long dim = -1;
      if (word != "dim" || !(fields >> dim) || dim < 0) {
        throw Error(ErrorCode::parse, "vector file must start with 'dim D'");
      }
      c.dim = static_cast<std::size_t>(dim);
      have_dim = true;
      continue;
    }
    std::vector<Integer> v;
    do {
      Integer value;
      if (value.set_str(word, 10) != 0) throw Error(ErrorCode::parse, "bad integer '" + word + "'");
      v.push_back(value);
    } while (fields >> word);
    if (v.size() != c.dim) throw Error(ErrorCode::parse, "vector length differs from dim");
    c.vectors.push_back(std::move(v));
  }
  if (!have_dim) throw Error(ErrorCode::parse, "vector file must start with 'dim D'");
  return c;
}

VectorConfig read_vector_config(const std::string& path) { return parse_vector_config(read_file(path)); }

std::pair<std::size_t, std::vector<Edge>> parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  std::size_t vertices = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(strip_comment(line));
    long long a = 0, b = 0;
    if (!(fields >> a)) continue;
    std::string extra;
    if (!(fields >> b) || (fields >> extra) || a < 1 || b < 1) {
      throw Error(ErrorCode::parse, "bad edge line '" + line + "'");
    }
    edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    vertices = std::max<std::size_t>(vertices, static_cast<std::size_t>(std::max(a, b)));
  }
  return {vertices, edges};
}

std::pair<std::size_t, std::vector<Edge>> read_graph(const std::string& path) { return parse_graph(read_file(path)); }

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "structured") return OutputFormat::structured;
  if (name == "latex") return OutputFormat::latex;
  throw Error(ErrorCode::parse, "unknown format '" + name + "'");
}

namespace {

ordered_json context_json(const ResultContext& context) {
  ordered_json doc;
  doc["what"] = context.what;
  doc["input"] = context.input;
  doc["method"] = context.method;
  doc["rank"] = context.rank;
  doc["n"] = context.n;
  return doc;
}

}  // namespace

std::string format_polynomial(const MultiPoly& p, OutputFormat format, const ResultContext& context) {
  switch (format) {
    case OutputFormat::text:
      return p.to_string();
    case OutputFormat::latex:
      return p.to_latex();
    case OutputFormat::structured: {
      ordered_json doc = context_json(context);
      doc["variables"] = p.variables();
      doc["polynomial"] = p.to_string();
      doc["terms"] = json::array();
      for (const auto& [e, c] : p.terms()) {
        ordered_json term;
        term["coefficient"] = to_string(c);
        ordered_json exps = ordered_json::object();
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] != 0) exps[p.variables()[i]] = e[i];
        }
        term["exponents"] = exps;
        doc["terms"].push_back(term);
      }
      return doc.dump();
    }
  }
  return p.to_string();
}

std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields, OutputFormat format,
                          const ResultContext& context) {
  if (format == OutputFormat::structured) {
    ordered_json doc = context_json(context);
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : fields) values[k] = v;
    doc["values"] = values;
    return doc.dump();
  }
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += '\n';
    out += fields[i].first + ": " + fields[i].second;
  }
  return out;
}

}  // namespace tuttekit
