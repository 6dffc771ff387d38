#include "coxrsk/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "coxrsk/coxeter.hpp"
#include "coxrsk/gkcore.hpp"
#include "coxrsk/io.hpp"
#include "coxrsk/rsk.hpp"

namespace coxrsk {

namespace {

// Thrown inside a check to stop at the first counterexample.
struct Violation {
  std::string detail;
};

std::string describe(const Filling& f) { return io::to_json(f).dump(); }

std::string variant_name(const RskVariant& v) {
  if (const auto* c = std::get_if<CoxeterElement>(&v)) return "c=" + to_string(*c);
  return "gansner";
}

template <typename Body>
CheckResult run_check(std::string name, Body body) {
  CheckResult result{std::move(name), true, {}};
  try {
    result.detail = body();
  } catch (const Violation& v) {
    result.passed = false;
    result.detail = v.detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("unexpected error: ") + e.what();
  }
  return result;
}

std::string check_shapes(const Partition& shape) {
  const IntervalBipartition be = elementary_bipartition(shape);
  const auto back = partition_of_bipartition(be);
  if (!be.is_elementary() || !back || *back != shape) {
    throw Violation{"elementary bipartition does not round-trip for " + to_string(shape)};
  }
  std::map<Box, int> seen;
  for (int m = 1; m <= hook_length_11(shape); ++m) {
    const Diagonal d = diagonal(shape, m);
    for (const Box& b : d.boxes) ++seen[b];
    std::set<Box> ideal;
    for (const Box& b : ideal_boxes(shape, d.apex)) ideal.insert(b);
    for (const Box& b : shape.boxes()) {
      const bool labelled = be.b(b.row) <= m && m < be.e(be.q() - b.col + 1);
      if (labelled != (ideal.count(b) > 0)) {
        throw Violation{"ideal/label mismatch for " + to_string(shape) + " at m=" +
                        std::to_string(m) + " box " + to_string(b)};
      }
    }
  }
  for (const Box& b : shape.boxes()) {
    if (seen[b] != 1) {
      throw Violation{"box " + to_string(b) + " lies on " + std::to_string(seen[b]) +
                      " diagonals of " + to_string(shape)};
    }
  }
  return "bipartition " + io::format_list(be.b()) + " | " + io::format_list(be.e());
}

std::string check_quivers(int n) {
  const auto elements = enumerate_coxeter(n);
  for (const auto& c : elements) {
    const ArQuiver q = ar_quiver(c);
    (void)WeightedDag(std::vector<Weight>(q.vertices.size(), 0), q.arcs);
    std::vector<Transposition> initial, final_letters;
    for (int i = 1; i < n; ++i) {
      if (is_initial(c, i)) initial.push_back({i, i + 1});
      if (is_final(c, i)) final_letters.push_back({i, i + 1});
    }
    if (q.sources() != initial || q.sinks() != final_letters) {
      throw Violation{"sources/sinks disagree with initial/final letters for c=" +
                      to_string(c)};
    }
    for (int m = 1; m < n; ++m) {
      const ArSlice s = ar_slice(q, m);
      if (s.sources().size() != 1 || s.sinks().size() != 1) {
        throw Violation{"slice m=" + std::to_string(m) + " of c=" + to_string(c) +
                        " has " + std::to_string(s.sources().size()) + " sources and " +
                        std::to_string(s.sinks().size()) + " sinks"};
      }
    }
  }
  return std::to_string(elements.size()) + " Coxeter elements of S_" + std::to_string(n);
}

// Sum of f over boxes (i,j) with b_i <= m < e_{q-j+1}.
Weight labelled_sum(const Partition& shape, const IntervalBipartition& be,
                    const Filling& f, int m) {
  Weight sum = 0;
  for (const Box& b : shape.boxes())
    if (be.b(b.row) <= m && m < be.e(be.q() - b.col + 1)) sum += f.at(b);
  return sum;
}

std::string check_forward(const Partition& shape, const RskVariant& variant,
                          Weight max_entry) {
  const IntervalBipartition be = elementary_bipartition(shape);
  std::set<std::vector<Weight>> outputs;
  std::size_t count = 0;
  for_each_filling(shape, max_entry, [&](const Filling& f) {
    ++count;
    const Filling g = forward_rsk(shape, variant, f);
    const std::string where = "shape=" + to_string(shape) + " " + variant_name(variant) +
                              " filling=" + describe(f);
    if (!is_rpp(g)) throw Violation{"output is not a reverse plane partition: " + where};
    if (!outputs.insert({g.values().begin(), g.values().end()}).second) {
      throw Violation{"two fillings share the output " + describe(g) + ": " + where};
    }
    for (int m = 1; m <= hook_length_11(shape); ++m) {
      Weight diag = 0;
      for (const Box& b : diagonal(shape, m).boxes) diag += g.at(b);
      if (diag != labelled_sum(shape, be, f, m)) {
        throw Violation{"diagonal sum law fails at m=" + std::to_string(m) + ": " + where};
      }
    }
  });
  return std::to_string(count) + " fillings, " + variant_name(variant);
}

std::string check_coincidence(const Partition& shape, Weight max_entry) {
  const CoxeterElement c0 = special_coxeter(shape);
  const CoxeterElement c1 = c0.inverse();
  std::size_t count = 0;
  for_each_filling(shape, max_entry, [&](const Filling& f) {
    ++count;
    const Filling g = gansner_rsk(shape, f);
    for (const auto& c : {c0, c1}) {
      if (coxeter_rsk(shape, c, f) != g) {
        throw Violation{"c=" + to_string(c) + " disagrees with gansner on shape=" +
                        to_string(shape) + " filling=" + describe(f)};
      }
    }
  });
  return "special c=" + to_string(c0) + " and its inverse, " + std::to_string(count) +
         " fillings";
}

std::string check_inverse(const Partition& shape, const std::vector<RskVariant>& variants,
                          Weight max_entry, std::size_t samples, std::uint64_t seed) {
  std::vector<Filling> inputs;
  if (shape.size() <= 4) {
    for_each_filling(shape, max_entry, [&](const Filling& f) { inputs.push_back(f); });
  } else {
    std::mt19937_64 rng(split_seed(seed, 7));
    for (std::size_t k = 0; k < std::min<std::size_t>(samples, 50); ++k)
      inputs.push_back(random_filling(shape, max_entry, rng));
  }
  for (const auto& variant : variants) {
    for (const Filling& f : inputs) {
      const Filling g = forward_rsk(shape, variant, f);
      if (g.max_entry() > kInvertMaxEntry) continue;
      const auto back = invert_rsk(shape, variant, g);
      if (!back || *back != f) {
        throw Violation{"inverse search does not recover shape=" + to_string(shape) + " " +
                        variant_name(variant) + " filling=" + describe(f)};
      }
    }
  }
  return std::to_string(inputs.size()) + " fillings x " + std::to_string(variants.size()) +
         " maps";
}

std::string check_oracle(std::size_t samples, std::uint64_t seed) {
  for (std::size_t k = 0; k < samples; ++k) {
    std::mt19937_64 rng(split_seed(seed, 1000 + k));
    const WeightedDag dag = random_dag(9, 9, rng);
    const std::size_t width = antichain_width(dag);
    const GkResult gk = gk_prefix(dag, width + 1, true);
    const auto brute = gk_bruteforce(dag, width + 1);
    const std::string where = "dag=" + io::to_json(dag).dump();
    if (gk.prefix_maxima != brute) {
      throw Violation{"flow M = " + io::format_list(gk.prefix_maxima) + " but brute force " +
                      io::format_list(brute) + ": " + where};
    }
    for (std::size_t l = 1; l < gk.parts.size(); ++l) {
      if (gk.parts[l] > gk.parts[l - 1]) throw Violation{"parts increase: " + where};
    }
    if (gk.prefix_maxima[width] != dag.total_weight()) {
      throw Violation{"M_width differs from the total weight: " + where};
    }
    const bool positive = std::all_of(dag.weights().begin(), dag.weights().end(),
                                      [](Weight w) { return w > 0; });
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(gk.parts.begin(), gk.parts.end(), [](Weight w) { return w > 0; }));
    if (nonzero > width || (positive && nonzero != width)) {
      throw Violation{"nonzero part count " + std::to_string(nonzero) + " vs width " +
                      std::to_string(width) + ": " + where};
    }
    for (std::size_t l = 1; l <= gk.witnesses.size(); ++l) {
      const PathTuple& w = gk.witnesses[l - 1];
      if (w.paths.size() != l || weight_of(dag, w) != gk.prefix_maxima[l]) {
        throw Violation{"witness for l=" + std::to_string(l) + " is unsound: " + where};
      }
    }
  }
  return std::to_string(samples) + " random DAGs";
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<Partition> shapes = options.shapes;
  if (shapes.empty()) {
    shapes = {Partition({2, 1}), Partition({2, 2}), Partition({3, 1}), Partition({3, 2, 1})};
  }
  VerifyReport report;
  report.seed = options.seed;
  report.checks.push_back(run_check("gkcore.oracle", [&] {
    return check_oracle(options.samples, options.seed);
  }));
  std::set<int> ranks;
  for (const auto& shape : shapes) ranks.insert(hook_length_11(shape) + 1);
  for (int n : ranks) {
    report.checks.push_back(run_check("coxeter.quiver n=" + std::to_string(n),
                                      [&] { return check_quivers(n); }));
  }
  for (const auto& shape : shapes) {
    const std::string tag = " " + to_string(shape);
    report.checks.push_back(run_check("shapes.bipartition" + tag,
                                      [&] { return check_shapes(shape); }));
    std::vector<RskVariant> variants{Gansner{}};
    if (options.all_coxeter) {
      for (auto& c : enumerate_coxeter(hook_length_11(shape) + 1)) variants.push_back(c);
    } else {
      const CoxeterElement c0 = special_coxeter(shape);
      variants.push_back(c0);
      if (!(c0.inverse() == c0)) variants.push_back(c0.inverse());
    }
    for (const auto& v : variants) {
      report.checks.push_back(run_check("rsk.forward" + tag + " " + variant_name(v), [&] {
        return check_forward(shape, v, options.max_entry);
      }));
    }
    report.checks.push_back(run_check("rsk.coincidence" + tag, [&] {
      return check_coincidence(shape, options.max_entry);
    }));
    if (shape.size() <= kInvertMaxBoxes) {
      report.checks.push_back(run_check("rsk.inverse" + tag, [&] {
        return check_inverse(shape, variants, options.max_entry, options.samples,
                             options.seed);
      }));
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "seed " << report.seed << '\n';
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(report.checks.size()) +
                           " checks failed")
     << '\n';
  return os.str();
}

}  // namespace coxrsk
