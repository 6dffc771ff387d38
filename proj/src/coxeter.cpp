#include "coxrsk/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace coxrsk {

namespace {

void check_permutation(const std::vector<int>& values, const char* what) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k = 0; k < n; ++k) {
    const int v = values[k];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw FormatError(std::string(what) + ": entry " + std::to_string(v) +
                        " at position " + std::to_string(k + 1) +
                        " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw FormatError(std::string(what) + ": entry " + std::to_string(v) +
                        " repeats at position " + std::to_string(k + 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::vector<Transposition> degree_filter(const std::vector<Transposition>& vertices,
                                         const std::vector<Arc>& arcs,
                                         bool want_sources) {
  std::vector<int> count(vertices.size(), 0);
  for (const auto& [u, v] : arcs) ++count[static_cast<std::size_t>(want_sources ? v : u)];
  std::vector<Transposition> out;
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (count[k] == 0) out.push_back(vertices[k]);
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw FormatError("permutation must be nonempty");
  check_permutation(images_, "permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) {
    throw RangeError("adjacent transposition s_" + std::to_string(i) +
                     " does not exist in S_" + std::to_string(n));
  }
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) {
    throw DomainError("cannot compose permutations of S_" + std::to_string(a.n()) +
                      " and S_" + std::to_string(b.n()));
  }
  std::vector<int> images(a.images_.size());
  for (int x = 1; x <= a.n(); ++x) images[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation(std::move(images));
}

int length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

CoxeterElement::CoxeterElement(Permutation perm, std::vector<int> cycle)
    : perm_(std::move(perm)), cycle_(std::move(cycle)) {}

CoxeterElement CoxeterElement::from_permutation(Permutation perm) {
  const int n = perm.n();
  if (n < 2) throw DomainError("Coxeter elements need n >= 2");
  std::vector<int> cycle{1};
  for (int x = perm(1); x != 1; x = perm(x)) cycle.push_back(x);
  if (static_cast<int>(cycle.size()) != n) {
    throw DomainError("not a Coxeter element: the cycle through 1 has length " +
                      std::to_string(cycle.size()) + ", expected " + std::to_string(n));
  }
  const auto peak = std::find(cycle.begin(), cycle.end(), n);
  const bool rising = std::is_sorted(cycle.begin(), peak + 1);
  const bool falling = std::is_sorted(peak, cycle.end(), std::greater<>());
  if (!rising || !falling) {
    std::ostringstream os;
    os << "not a Coxeter element: cycle (";
    for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k];
    os << ") is not unimodal";
    throw DomainError(os.str());
  }
  return CoxeterElement(std::move(perm), std::move(cycle));
}

CoxeterElement CoxeterElement::from_cycle(const std::vector<int>& values) {
  if (values.size() < 2) throw FormatError("cycle needs at least two entries");
  check_permutation(values, "cycle");
  if (values.front() != 1) {
    throw FormatError("cycle must start at 1, got " + std::to_string(values.front()));
  }
  std::vector<int> images(values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    images[static_cast<std::size_t>(values[k] - 1)] = values[(k + 1) % values.size()];
  return from_permutation(Permutation(std::move(images)));
}

CoxeterElement CoxeterElement::from_word(const std::vector<int>& letters) {
  if (letters.empty()) throw FormatError("word needs at least one letter");
  check_permutation(letters, "word");
  const int n = static_cast<int>(letters.size()) + 1;
  Permutation c = Permutation::identity(n);
  for (int letter : letters) c = c * Permutation::adjacent(n, letter);
  return from_permutation(std::move(c));
}

CoxeterElement CoxeterElement::inverse() const {
  return from_permutation(perm_.inverse());
}

std::string to_string(const CoxeterElement& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.cycle().size(); ++k) os << (k ? "," : "") << c.cycle()[k];
  os << ')';
  return os.str();
}

bool is_initial(const CoxeterElement& c, int i) {
  if (i < 1 || i >= c.n()) {
    throw RangeError("index " + std::to_string(i) + " outside [1, " +
                     std::to_string(c.n() - 1) + "]");
  }
  const Permutation inv = c.perm().inverse();
  return inv(i) > inv(i + 1);
}

bool is_final(const CoxeterElement& c, int i) {
  if (i < 1 || i >= c.n()) {
    throw RangeError("index " + std::to_string(i) + " outside [1, " +
                     std::to_string(c.n() - 1) + "]");
  }
  return c(i) > c(i + 1);
}

CoxeterElement from_orientation(int n, const std::vector<bool>& left_first) {
  if (n < 2) throw DomainError("Coxeter elements need n >= 2");
  if (left_first.size() != static_cast<std::size_t>(n - 2)) {
    throw DomainError("orientation of S_" + std::to_string(n) + " needs " +
                      std::to_string(n - 2) + " edges");
  }
  // Letters 1..n-1 on a path; edge k joins k and k+1.
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n - 2; ++k)
    ++indegree[static_cast<std::size_t>(left_first[static_cast<std::size_t>(k - 1)] ? k + 1 : k)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int k = 1; k <= n - 1; ++k)
    if (indegree[static_cast<std::size_t>(k)] == 0) ready.push(k);
  std::vector<int> word;
  while (!ready.empty()) {
    const int k = ready.top();
    ready.pop();
    word.push_back(k);
    auto release = [&](int other, bool k_first) {
      if (k_first && --indegree[static_cast<std::size_t>(other)] == 0) ready.push(other);
    };
    if (k >= 2) release(k - 1, !left_first[static_cast<std::size_t>(k - 2)]);
    if (k <= n - 2) release(k + 1, left_first[static_cast<std::size_t>(k - 1)]);
  }
  return CoxeterElement::from_word(word);
}

std::vector<CoxeterElement> enumerate_coxeter(int n) {
  if (n < 2) throw DomainError("Coxeter elements need n >= 2");
  std::vector<CoxeterElement> out;
  const std::size_t count = std::size_t{1} << (n - 2);
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    // Bit i-2 set: s_i precedes s_{i-1}.
    std::vector<bool> left_first(static_cast<std::size_t>(n - 2));
    for (int i = 2; i <= n - 1; ++i)
      left_first[static_cast<std::size_t>(i - 2)] = ((mask >> (i - 2)) & 1U) == 0;
    CoxeterElement c = from_orientation(n, left_first);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

int ArQuiver::id(Transposition t) const {
  if (t.lo < 1 || t.lo >= t.hi || t.hi > n) {
    throw DomainError("transposition " + to_string(t) + " not in S_" + std::to_string(n));
  }
  // Rows x' < x contribute n - x' vertices each.
  const int before = (t.lo - 1) * n - (t.lo - 1) * t.lo / 2;
  return before + (t.hi - t.lo - 1);
}

std::vector<Transposition> ArQuiver::sources() const {
  return degree_filter(vertices, arcs, true);
}

std::vector<Transposition> ArQuiver::sinks() const {
  return degree_filter(vertices, arcs, false);
}

ArQuiver ar_quiver(const CoxeterElement& c) {
  ArQuiver q;
  q.n = c.n();
  for (int x = 1; x <= q.n; ++x)
    for (int y = x + 1; y <= q.n; ++y) q.vertices.push_back({x, y});
  for (const auto& t : q.vertices) {
    const int from = q.id(t);
    if (t.lo < c(t.hi)) q.arcs.push_back({from, q.id({t.lo, c(t.hi)})});
    if (c(t.lo) < t.hi) q.arcs.push_back({from, q.id({c(t.lo), t.hi})});
  }
  std::sort(q.arcs.begin(), q.arcs.end());
  q.arcs.erase(std::unique(q.arcs.begin(), q.arcs.end()), q.arcs.end());
  return q;
}

WeightedDag ArSlice::with_weights(std::vector<Weight> weights) const {
  return WeightedDag(std::move(weights), arcs);
}

std::vector<Transposition> ArSlice::sources() const {
  return degree_filter(vertices, arcs, true);
}

std::vector<Transposition> ArSlice::sinks() const {
  return degree_filter(vertices, arcs, false);
}

ArSlice ar_slice(const ArQuiver& quiver, int m) {
  if (m < 1 || m > quiver.n - 1) {
    throw RangeError("slice index " + std::to_string(m) + " outside [1, " +
                     std::to_string(quiver.n - 1) + "]");
  }
  ArSlice s;
  s.m = m;
  std::vector<int> local(quiver.vertices.size(), -1);
  for (std::size_t k = 0; k < quiver.vertices.size(); ++k) {
    const auto& t = quiver.vertices[k];
    if (t.lo <= m && m < t.hi) {
      local[k] = static_cast<int>(s.vertices.size());
      s.vertices.push_back(t);
    }
  }
  for (const auto& [u, v] : quiver.arcs) {
    const int lu = local[static_cast<std::size_t>(u)];
    const int lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) s.arcs.push_back({lu, lv});
  }
  return s;
}

ArSlice ar_slice(const CoxeterElement& c, int m) { return ar_slice(ar_quiver(c), m); }

}  // namespace coxrsk
