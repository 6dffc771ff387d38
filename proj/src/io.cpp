#include "coxrsk/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace coxrsk::io {

namespace {

bool is_separator(char ch) {
  return ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && is_separator(text[k])) ++k;
    const std::size_t start = k;
    while (k < text.size() && !is_separator(text[k])) ++k;
    if (k > start) out.push_back({text.substr(start, k - start), start});
  }
  return out;
}

int to_int(const Token& t, std::string_view what) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(std::string(what) + ": bad token '" + std::string(t.text) +
                      "' at offset " + std::to_string(t.offset));
  }
  return value;
}

Weight as_weight(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw FormatError(where + ": expected an integer, got " + v.dump());
  }
  const auto w = v.get<std::int64_t>();
  if (w < 0) throw FormatError(where + ": expected a nonnegative integer, got " + v.dump());
  return w;
}

const json& member(const json& doc, const char* key, const char* kind) {
  if (!doc.is_object()) throw FormatError(std::string(kind) + " JSON must be an object");
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw FormatError(std::string(kind) + " JSON is missing \"" + key + "\"");
  }
  if (!it->is_array()) {
    throw FormatError(std::string(kind) + " JSON: \"" + key + "\" must be an array");
  }
  return *it;
}

std::string escape_label(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  for (const Token& t : tokenize(text)) out.push_back(to_int(t, what));
  if (out.empty()) throw FormatError(std::string(what) + ": no values given");
  return out;
}

Partition parse_shape(std::string_view text) {
  const auto parts = parse_int_list(text, "shape");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0) {
      throw FormatError("shape: negative part " + std::to_string(parts[k]) +
                        " at position " + std::to_string(k + 1));
    }
  }
  return Partition(parts);
}

CoxeterElement parse_cycle(std::string_view text) {
  return CoxeterElement::from_cycle(parse_int_list(text, "cycle"));
}

CoxeterElement parse_word(std::string_view text) {
  std::vector<int> letters;
  for (Token t : tokenize(text)) {
    if (!t.text.empty() && (t.text.front() == 's' || t.text.front() == 'S')) {
      t.text.remove_prefix(1);
      t.offset += 1;
    }
    letters.push_back(to_int(t, "word"));
  }
  if (letters.empty()) throw FormatError("word: no letters given");
  return CoxeterElement::from_word(letters);
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(source) + ": malformed JSON at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }
}

Filling filling_from_json(const json& doc) {
  const json& shape_json = member(doc, "shape", "filling");
  const json& rows_json = member(doc, "rows", "filling");
  std::vector<int> parts;
  for (std::size_t k = 0; k < shape_json.size(); ++k) {
    const auto w = as_weight(shape_json[k], "shape[" + std::to_string(k) + "]");
    parts.push_back(static_cast<int>(w));
  }
  std::vector<std::vector<Weight>> rows;
  for (std::size_t r = 0; r < rows_json.size(); ++r) {
    const json& row = rows_json[r];
    if (!row.is_array()) {
      throw FormatError("rows[" + std::to_string(r) + "]: expected an array");
    }
    std::vector<Weight> values;
    for (std::size_t c = 0; c < row.size(); ++c)
      values.push_back(as_weight(row[c], "rows[" + std::to_string(r) + "][" +
                                             std::to_string(c) + "]"));
    rows.push_back(std::move(values));
  }
  return Filling::from_rows(Partition(parts), rows);
}

json to_json(const Filling& f) {
  return json{{"shape", f.shape().parts()}, {"rows", f.rows()}};
}

WeightedDag dag_from_json(const json& doc) {
  const json& weights_json = member(doc, "weights", "DAG");
  const json& arcs_json = member(doc, "arcs", "DAG");
  std::vector<Weight> weights;
  for (std::size_t k = 0; k < weights_json.size(); ++k)
    weights.push_back(as_weight(weights_json[k], "weights[" + std::to_string(k) + "]"));
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < arcs_json.size(); ++k) {
    const json& a = arcs_json[k];
    const std::string where = "arcs[" + std::to_string(k) + "]";
    if (!a.is_array() || a.size() != 2) {
      throw FormatError(where + ": expected a pair [from, to], got " + a.dump());
    }
    arcs.push_back({static_cast<int>(as_weight(a[0], where + "[0]")),
                    static_cast<int>(as_weight(a[1], where + "[1]"))});
  }
  return WeightedDag(std::move(weights), std::move(arcs));
}

json to_json(const WeightedDag& dag) {
  json arcs = json::array();
  for (const auto& [u, v] : dag.arcs()) arcs.push_back({u, v});
  return json{{"weights", dag.weights()}, {"arcs", arcs}};
}

json to_json(const GkResult& gk, std::size_t width) {
  json doc{{"parts", gk.parts}, {"prefix_maxima", gk.prefix_maxima}, {"width", width}};
  if (!gk.witnesses.empty()) {
    json witnesses = json::array();
    for (const auto& w : gk.witnesses) witnesses.push_back(w.paths);
    doc["witnesses"] = witnesses;
  }
  return doc;
}

json to_json(const CoxeterElement& c) {
  json initial = json::array(), final_letters = json::array();
  for (int i = 1; i < c.n(); ++i) {
    if (is_initial(c, i)) initial.push_back(i);
    if (is_final(c, i)) final_letters.push_back(i);
  }
  return json{{"n", c.n()},
              {"cycle", c.cycle()},
              {"images", c.perm().images()},
              {"initial", initial},
              {"final", final_letters}};
}

std::string format_grid(const Filling& f) {
  std::ostringstream os;
  for (const auto& row : f.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

std::string format_list(const std::vector<Weight>& values) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? " " : "") << values[k];
  return os.str();
}

std::string format_list(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? " " : "") << values[k];
  return os.str();
}

std::string dag_to_dot(const WeightedDag& dag, const PathTuple* highlight) {
  std::set<int> bold_vertices;
  std::set<Arc> bold_arcs;
  if (highlight) {
    for (const auto& p : highlight->paths) {
      bold_vertices.insert(p.begin(), p.end());
      for (std::size_t k = 0; k + 1 < p.size(); ++k) bold_arcs.insert({p[k], p[k + 1]});
    }
  }
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t v = 0; v < dag.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << ": " << dag.weights()[v] << "\"";
    if (bold_vertices.count(static_cast<int>(v)))
      os << ", style=filled, fillcolor=gray80";
    os << "];\n";
  }
  for (const auto& a : dag.arcs()) {
    os << "  v" << a.first << " -> v" << a.second;
    if (bold_arcs.count(a)) os << " [penwidth=3, color=gray40]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string quiver_to_dot(const ArQuiver& quiver, std::optional<int> slice,
                          const LiftedFilling* weights) {
  std::vector<Transposition> vertices = quiver.vertices;
  std::vector<Arc> arcs = quiver.arcs;
  if (slice) {
    ArSlice s = ar_slice(quiver, *slice);
    vertices = std::move(s.vertices);
    arcs = std::move(s.arcs);
  }
  const WeightedDag shape(std::vector<Weight>(vertices.size(), 0), arcs);
  std::vector<int> depth(vertices.size(), 0);
  for (int v : shape.topological_order())
    for (int s : shape.successors(v))
      depth[static_cast<std::size_t>(s)] =
          std::max(depth[static_cast<std::size_t>(s)], depth[static_cast<std::size_t>(v)] + 1);

  auto name = [&](std::size_t k) {
    return "t" + std::to_string(vertices[k].lo) + "_" + std::to_string(vertices[k].hi);
  };
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    std::string label = to_string(vertices[k]);
    if (weights) label += ": " + std::to_string(weights->weight(vertices[k]));
    os << "  " << name(k) << " [label=\"" << escape_label(label) << "\"];\n";
  }
  std::map<int, std::vector<std::size_t>> ranks;
  for (std::size_t k = 0; k < vertices.size(); ++k) ranks[depth[k]].push_back(k);
  for (const auto& [d, members] : ranks) {
    os << "  { rank=same;";
    for (std::size_t k : members) os << ' ' << name(k) << ';';
    os << " }\n";
  }
  for (const auto& [u, v] : arcs)
    os << "  " << name(static_cast<std::size_t>(u)) << " -> "
       << name(static_cast<std::size_t>(v)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxrsk::io
