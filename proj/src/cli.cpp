#include "coxrsk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "coxrsk/coxeter.hpp"
#include "coxrsk/gkcore.hpp"
#include "coxrsk/io.hpp"
#include "coxrsk/rsk.hpp"
#include "coxrsk/verify.hpp"

namespace coxrsk::cli {

namespace {

using io::json;

struct Options {
  std::string shape;
  std::string filling;
  std::string dag;
  std::string coxeter;
  std::string word;
  std::string format;
  int slice = 0;
  int n = 0;
  std::size_t witness = 0;
  // verify
  std::vector<std::string> shapes;
  Weight max_entry = 2;
  bool all_coxeter = false;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
};

// A path, "-" for stdin, or inline JSON starting with '{'.
std::string read_source(const std::string& source) {
  if (!source.empty() && source.front() == '{') return source;
  if (source == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string source_name(const std::string& source) {
  if (!source.empty() && source.front() == '{') return "<inline>";
  if (source == "-") return "<stdin>";
  return source;
}

Filling load_filling(const Options& o) {
  Filling f = io::filling_from_json(io::parse_json(read_source(o.filling), source_name(o.filling)));
  if (!o.shape.empty()) {
    const Partition shape = io::parse_shape(o.shape);
    if (shape != f.shape()) {
      throw DomainError("--shape " + to_string(shape) + " does not match filling shape " +
                        to_string(f.shape()));
    }
  }
  return f;
}

std::optional<CoxeterElement> load_coxeter(const Options& o) {
  if (!o.coxeter.empty() && !o.word.empty()) {
    throw FormatError("give either --coxeter or --word, not both");
  }
  if (!o.coxeter.empty()) return io::parse_cycle(o.coxeter);
  if (!o.word.empty()) return io::parse_word(o.word);
  return std::nullopt;
}

void emit_filling(const Filling& g, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << io::to_json(g).dump() << '\n';
  } else {
    out << io::format_grid(g);
  }
}

void add_coxeter_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--coxeter", o.coxeter, "Coxeter element as a cycle, e.g. \"1 3 4 2\"");
  cmd->add_option("--word", o.word, "Coxeter element as a word, e.g. \"s2 s1 s3\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ferrers-diagram RSK correspondences and Greene-Kleitman invariants", "coxrsk"};
  app.require_subcommand(1);
  Options o;

  auto* gansner = app.add_subcommand("gansner", "Gansner RSK of a filling");
  gansner->add_option("--shape", o.shape, "Shape, e.g. 5,3,3,2");
  gansner->add_option("--filling", o.filling, "Filling JSON (path, '-' or inline)")->required();
  gansner->add_option("--format", o.format, "grid | json")
      ->check(CLI::IsMember({"grid", "json"}))->default_val("grid");

  auto* coxrsk = app.add_subcommand("coxrsk", "Coxeter-parametrized RSK of a filling");
  coxrsk->add_option("--shape", o.shape, "Shape, e.g. 5,3,3,2");
  coxrsk->add_option("--filling", o.filling, "Filling JSON (path, '-' or inline)")->required();
  add_coxeter_options(coxrsk, o);
  coxrsk->add_option("--format", o.format, "grid | json")
      ->check(CLI::IsMember({"grid", "json"}))->default_val("grid");

  auto* special = app.add_subcommand("special-coxeter",
                                     "Coxeter element whose RSK agrees with Gansner's");
  special->add_option("--shape", o.shape, "Shape, e.g. 2,1")->required();
  special->add_option("--format", o.format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

  auto* invert = app.add_subcommand("invert", "Preimage of a reverse plane partition");
  invert->add_option("--shape", o.shape, "Shape, e.g. 2,1");
  invert->add_option("--filling", o.filling, "RPP JSON (path, '-' or inline)")->required();
  add_coxeter_options(invert, o);
  invert->add_option("--format", o.format, "grid | json")
      ->check(CLI::IsMember({"grid", "json"}))->default_val("grid");

  auto* gk = app.add_subcommand("gk", "Greene-Kleitman invariant of a weighted DAG");
  gk->add_option("--dag", o.dag, "DAG JSON (path, '-' or inline)")->required();
  gk->add_option("--format", o.format, "plain | json | dot")
      ->check(CLI::IsMember({"plain", "json", "dot"}))->default_val("plain");
  gk->add_option("--witness", o.witness, "Highlight the optimal l-tuple of paths (dot)");

  auto* width = app.add_subcommand("width", "Largest antichain of a DAG");
  width->add_option("--dag", o.dag, "DAG JSON (path, '-' or inline)")->required();

  auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver of a Coxeter element");
  add_coxeter_options(ar, o);
  ar->add_option("--slice", o.slice, "Only the slice of transpositions (i,j), i <= m < j");
  ar->add_option("--shape", o.shape, "Shape for lifted weights");
  ar->add_option("--filling", o.filling, "Filling whose lift labels the vertices");
  ar->add_option("--format", o.format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}))->default_val("dot");

  auto* list = app.add_subcommand("coxeter-list", "All Coxeter elements of S_n");
  list->add_option("--n", o.n, "n >= 2")->required();
  list->add_option("--format", o.format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_option("--shape", o.shapes, "Shape(s) to enumerate (repeatable)");
  verify->add_option("--max-entry", o.max_entry, "Largest filling entry to enumerate")
      ->check(CLI::Range(0, 12));
  verify->add_flag("--all-coxeter", o.all_coxeter, "Check every Coxeter element of S_n");
  verify->add_option("--samples", o.samples, "Random DAGs / sampled fillings");
  verify->add_option("--seed", o.seed, "Run seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (gansner->parsed()) {
      const Filling f = load_filling(o);
      emit_filling(gansner_rsk(f.shape(), f), o.format, out);
    } else if (coxrsk->parsed()) {
      const Filling f = load_filling(o);
      const auto c = load_coxeter(o);
      if (!c) throw FormatError("coxrsk needs --coxeter or --word");
      emit_filling(coxeter_rsk(f.shape(), *c, f), o.format, out);
    } else if (special->parsed()) {
      const CoxeterElement c = special_coxeter(io::parse_shape(o.shape));
      if (o.format == "json") {
        out << io::to_json(c).dump() << '\n';
      } else {
        out << io::format_list(c.cycle()) << '\n';
      }
    } else if (invert->parsed()) {
      const Filling g = load_filling(o);
      const auto c = load_coxeter(o);
      const RskVariant variant = c ? RskVariant(*c) : RskVariant(Gansner{});
      const auto f = invert_rsk(g.shape(), variant, g);
      if (!f) throw DomainError("no preimage: the input is not in the image of the map");
      emit_filling(*f, o.format, out);
    } else if (gk->parsed()) {
      const WeightedDag dag = io::dag_from_json(io::parse_json(read_source(o.dag), source_name(o.dag)));
      const std::size_t w = antichain_width(dag);
      const bool witnesses = o.format == "json" || o.witness > 0;
      const GkResult result = gk_prefix(dag, std::max(w, o.witness), witnesses);
      GkResult truncated = result;
      truncated.parts.resize(w);
      truncated.prefix_maxima.resize(w + 1);
      if (witnesses) truncated.witnesses.resize(w);
      if (o.format == "json") {
        out << io::to_json(truncated, w).dump() << '\n';
      } else if (o.format == "dot") {
        const PathTuple* highlight =
            o.witness > 0 ? &result.witnesses[o.witness - 1] : nullptr;
        out << io::dag_to_dot(dag, highlight);
      } else {
        out << io::format_list(truncated.parts) << '\n';
      }
    } else if (width->parsed()) {
      const WeightedDag dag = io::dag_from_json(io::parse_json(read_source(o.dag), source_name(o.dag)));
      out << antichain_width(dag) << '\n';
    } else if (ar->parsed()) {
      const auto c = load_coxeter(o);
      if (!c) throw FormatError("ar needs --coxeter or --word");
      const ArQuiver q = ar_quiver(*c);
      std::optional<int> slice;
      if (o.slice != 0) slice = o.slice;
      std::optional<LiftedFilling> lifted;
      if (!o.filling.empty()) {
        const Filling f = load_filling(o);
        if (hook_length_11(f.shape()) + 1 != c->n()) {
          throw DomainError("shape " + to_string(f.shape()) + " needs S_" +
                            std::to_string(hook_length_11(f.shape()) + 1) + ", got S_" +
                            std::to_string(c->n()));
        }
        lifted = lift_filling(f.shape(), f);
      }
      if (o.format == "json") {
        std::vector<Transposition> vertices = q.vertices;
        std::vector<Arc> arcs = q.arcs;
        if (slice) {
          ArSlice s = ar_slice(q, *slice);
          vertices = s.vertices;
          arcs = s.arcs;
        }
        json vs = json::array(), as = json::array();
        for (const auto& t : vertices) vs.push_back({t.lo, t.hi});
        for (const auto& [u, v] : arcs) as.push_back({vs[static_cast<std::size_t>(u)], vs[static_cast<std::size_t>(v)]});
        out << json{{"n", q.n}, {"vertices", vs}, {"arcs", as}}.dump() << '\n';
      } else {
        out << io::quiver_to_dot(q, slice, lifted ? &*lifted : nullptr);
      }
    } else if (list->parsed()) {
      const auto elements = enumerate_coxeter(o.n);
      if (o.format == "json") {
        json doc = json::array();
        for (const auto& c : elements) doc.push_back(c.cycle());
        out << doc.dump() << '\n';
      } else {
        for (const auto& c : elements) out << io::format_list(c.cycle()) << '\n';
      }
    } else if (verify->parsed()) {
      VerifyOptions vo;
      for (const auto& s : o.shapes) vo.shapes.push_back(io::parse_shape(s));
      vo.max_entry = o.max_entry;
      vo.all_coxeter = o.all_coxeter;
      vo.samples = o.samples;
      vo.seed = o.seed;
      const VerifyReport report = run_verification(vo);
      out << format_report(report);
      return report.passed() ? kOk : kVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace coxrsk::cli
