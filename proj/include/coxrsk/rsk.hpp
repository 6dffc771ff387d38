#pragma once

// Ferrers-diagram RSK and its Coxeter-parametrized generalization.
//
// Both maps read a filling g of shape lambda diagonal by diagonal: for the
// m-th diagonal with apex (u_m, v_m) and each box (i,j) on it,
//   g(i,j) = GK(subgraph_m)_{u_m - i + 1},
// where subgraph_m is the ideal below the apex inside G_lambda (Gansner) or
// the slice AR_m(c) of the Auslander-Reiten quiver weighted by the lifted
// filling (Coxeter version).

#include <optional>
#include <variant>
#include <vector>

#include "coxrsk/coxeter.hpp"
#include "coxrsk/gkcore.hpp"
#include "coxrsk/shapes.hpp"

namespace coxrsk {

// The grid digraph on Fer(lambda) with arcs (i,j)->(i+1,j) and (i,j)->(i,j+1).
class ShapeGraph {
 public:
  explicit ShapeGraph(Partition shape);

  const Partition& shape() const noexcept { return shape_; }
  // Vertex ids follow shape().boxes() (row-major).
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int hook() const noexcept { return hook_length_11(shape_); }

  // Row-major boxes of the ideal below the apex of diagonal m, and the
  // induced arcs in local ids.
  struct Ideal {
    std::vector<Box> boxes;
    std::vector<Arc> arcs;
  };
  Ideal ideal(int m) const;

  WeightedDag weighted(const Filling& f) const;

 private:
  Partition shape_;
  std::vector<Box> boxes_;
  std::vector<Arc> arcs_;
};

ShapeGraph graph_of_shape(const Partition& shape);

Filling gansner_rsk(const Partition& shape, const Filling& f);

// A filling of shape lambda transported to the vertices (x,y) of the AR
// quiver of S_n through box_label.
class LiftedFilling {
 public:
  LiftedFilling(Filling base, IntervalBipartition bipartition);

  const Filling& base() const noexcept { return base_; }
  const IntervalBipartition& bipartition() const noexcept { return bipartition_; }
  int n() const noexcept { return n_; }
  Weight weight(Transposition t) const;
  Weight total() const noexcept;
  // Reads the filling back along box_label.
  Filling restrict() const;

 private:
  Filling base_;
  IntervalBipartition bipartition_;
  int n_;
  // weights_[(lo-1)*n + (hi-1)]
  std::vector<Weight> weights_;
};

LiftedFilling lift_filling(const Partition& shape, const Filling& f);

Filling coxeter_rsk(const Partition& shape, const CoxeterElement& c,
                    const Filling& f);

// The Coxeter element of S_{hook+1} whose final letters are the s_i with
// i in B and i+1 in E, and whose interior initial letters are the s_i with
// i in E and i+1 in B.
CoxeterElement special_coxeter(const Partition& shape);

// Selects the forward map for invert_rsk.
struct Gansner {};
using RskVariant = std::variant<Gansner, CoxeterElement>;

Filling forward_rsk(const Partition& shape, const RskVariant& variant,
                    const Filling& f);

// Search limits for invert_rsk.
inline constexpr int kInvertMaxBoxes = 9;
inline constexpr Weight kInvertMaxEntry = 12;

// Preimage of `g` under the selected map, found by bounded depth-first
// search; nullopt if `g` has none. Throws CapacityError when the shape has
// more than kInvertMaxBoxes boxes or g has an entry above kInvertMaxEntry.
std::optional<Filling> invert_rsk(const Partition& shape,
                                  const RskVariant& variant, const Filling& g);

}  // namespace coxrsk
