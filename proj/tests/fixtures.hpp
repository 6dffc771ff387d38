#pragma once

// Reference instances shared by the unit and acceptance suites.

#include <utility>
#include <vector>

#include "coxrsk/coxeter.hpp"
#include "coxrsk/gkcore.hpp"
#include "coxrsk/shapes.hpp"

namespace fixtures {

// 11-vertex DAG whose GK invariant is (13,5,3,2).
inline coxrsk::WeightedDag reference_dag() {
  return coxrsk::WeightedDag(
      {1, 2, 3, 2, 2, 1, 0, 4, 2, 5, 1},
      {{0, 2}, {0, 3}, {0, 7}, {1, 4}, {1, 5}, {2, 6}, {3, 9},
       {4, 8}, {5, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 10}, {4, 7}});
}

inline coxrsk::Partition reference_shape() { return coxrsk::Partition({5, 3, 3, 2}); }

inline coxrsk::Filling reference_input() {
  return coxrsk::Filling::from_rows(reference_shape(),
                                    {{1, 2, 1, 0, 3}, {2, 1, 1}, {2, 1, 3}, {3, 2}});
}

inline coxrsk::Filling reference_output() {
  return coxrsk::Filling::from_rows(reference_shape(),
                                    {{1, 3, 4, 4, 7}, {3, 4, 5}, {4, 6, 9}, {8, 10}});
}

inline coxrsk::CoxeterElement reference_coxeter() {
  return coxrsk::CoxeterElement::from_cycle({1, 3, 4, 7, 9, 8, 6, 5, 2});
}

using TPair = std::pair<coxrsk::Transposition, coxrsk::Transposition>;

// The 56 arcs of the AR quiver of (1,3,4,7,9,8,6,5,2), listed by hand.
inline std::vector<TPair> reference_ar_arcs() {
  const int raw[][4] = {
      {1,3,1,4}, {1,4,3,4}, {1,4,1,7}, {1,5,3,5}, {1,5,1,2}, {1,6,3,6}, {1,6,1,5},
      {1,7,3,7}, {1,7,1,9}, {1,8,3,8}, {1,8,1,6}, {1,9,3,9}, {1,9,1,8}, {2,3,1,3},
      {2,3,2,4}, {2,4,1,4}, {2,4,2,7}, {2,5,1,5}, {2,6,1,6}, {2,6,2,5}, {2,7,1,7},
      {2,7,2,9}, {2,8,1,8}, {2,8,2,6}, {2,9,1,9}, {2,9,2,8}, {3,4,3,7}, {3,5,4,5},
      {3,6,4,6}, {3,6,3,5}, {3,7,4,7}, {3,7,3,9}, {3,8,4,8}, {3,8,3,6}, {3,9,4,9},
      {3,9,3,8}, {4,6,4,5}, {4,7,4,9}, {4,8,7,8}, {4,8,4,6}, {4,9,7,9}, {4,9,4,8},
      {5,6,2,6}, {5,7,2,7}, {5,7,5,9}, {5,8,2,8}, {5,8,5,6}, {5,9,2,9}, {5,9,5,8},
      {6,7,5,7}, {6,7,6,9}, {6,8,5,8}, {6,9,5,9}, {6,9,6,8}, {7,9,7,8}, {8,9,6,9}};
  std::vector<TPair> out;
  for (const auto& r : raw) out.push_back({{r[0], r[1]}, {r[2], r[3]}});
  return out;
}

}  // namespace fixtures
