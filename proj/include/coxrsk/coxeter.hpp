#pragma once

// Type A Coxeter elements and their Auslander-Reiten quivers.
//
// Permutations act on {1..n}; products compose right to left, so
// (a * b)(x) = a(b(x)).

#include <cstddef>
#include <string>
#include <vector>

#include "coxrsk/common.hpp"
#include "coxrsk/gkcore.hpp"

namespace coxrsk {

class Permutation {
 public:
  // images[k] is the image of k+1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Adjacent transposition s_i = (i i+1) in S_n.
  static Permutation adjacent(int n, int i);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Number of inversions; equals the Coxeter length.
int length(const Permutation& w);

class CoxeterElement {
 public:
  // Cycle notation (v_1 ... v_n) with v_1 = 1, mapping v_k to v_{k+1}.
  static CoxeterElement from_cycle(const std::vector<int>& values);
  // Product s_{a_1} s_{a_2} ... s_{a_k}; letters must be a permutation of
  // 1..n-1.
  static CoxeterElement from_word(const std::vector<int>& letters);
  static CoxeterElement from_permutation(Permutation perm);

  const Permutation& perm() const noexcept { return perm_; }
  int n() const noexcept { return perm_.n(); }
  int operator()(int x) const { return perm_(x); }
  // Cycle rooted at 1.
  const std::vector<int>& cycle() const noexcept { return cycle_; }
  CoxeterElement inverse() const;

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.perm_ == b.perm_;
  }

 private:
  CoxeterElement(Permutation perm, std::vector<int> cycle);

  Permutation perm_;
  std::vector<int> cycle_;
};

std::string to_string(const CoxeterElement& c);

// s_i initial: l(s_i c) < l(c). s_i final: l(c s_i) < l(c).
bool is_initial(const CoxeterElement& c, int i);
bool is_final(const CoxeterElement& c, int i);

// Builds the Coxeter element whose word places s_i before s_{i+1} exactly
// when left_first[i-1] is true (i = 1..n-2). The word is the smallest-index
// linear extension of that orientation.
CoxeterElement from_orientation(int n, const std::vector<bool>& left_first);

// All 2^(n-2) Coxeter elements of S_n (one for n = 2), deterministic order.
std::vector<CoxeterElement> enumerate_coxeter(int n);

struct ArQuiver {
  int n = 0;
  // Lexicographic; vertex id = position.
  std::vector<Transposition> vertices;
  // Sorted, unique arcs between vertex ids.
  std::vector<Arc> arcs;

  int id(Transposition t) const;
  std::vector<Transposition> sources() const;
  std::vector<Transposition> sinks() const;
};

ArQuiver ar_quiver(const CoxeterElement& c);

// Induced subgraph on {(x,y) | x <= m < y}.
struct ArSlice {
  int m = 0;
  std::vector<Transposition> vertices;
  std::vector<Arc> arcs;

  WeightedDag with_weights(std::vector<Weight> weights) const;
  std::vector<Transposition> sources() const;
  std::vector<Transposition> sinks() const;
};

ArSlice ar_slice(const ArQuiver& quiver, int m);
ArSlice ar_slice(const CoxeterElement& c, int m);

}  // namespace coxrsk
