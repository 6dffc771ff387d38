#pragma once

// Text formats: filling and DAG JSON, plain grids, Coxeter strings, DOT.
//
// Filling JSON: {"shape":[5,3,3,2],"rows":[[1,2,1,0,3],[2,1,1],[2,1,3],[3,2]]}
// DAG JSON:     {"weights":[1,2,3],"arcs":[[0,1],[1,2]]}   (zero-based ids)

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "coxrsk/coxeter.hpp"
#include "coxrsk/gkcore.hpp"
#include "coxrsk/rsk.hpp"
#include "coxrsk/shapes.hpp"

namespace coxrsk::io {

using nlohmann::json;

// "5,3,3,2" (spaces also accepted as separators).
Partition parse_shape(std::string_view text);

// Whitespace- or comma-separated integers.
std::vector<int> parse_int_list(std::string_view text, std::string_view what);

// "1 3 4 7 9 8 6 5 2"
CoxeterElement parse_cycle(std::string_view text);
// "s2 s1 s3 s6 s5 s4 s8 s7" (the leading 's' is optional)
CoxeterElement parse_word(std::string_view text);

// Parses JSON text, reporting the byte offset of syntax errors.
json parse_json(std::string_view text, std::string_view source);

Filling filling_from_json(const json& doc);
json to_json(const Filling& f);

WeightedDag dag_from_json(const json& doc);
json to_json(const WeightedDag& dag);

json to_json(const GkResult& gk, std::size_t width);
json to_json(const CoxeterElement& c);

// Rows of space-separated integers, one row per line.
std::string format_grid(const Filling& f);
// Space-separated values on one line.
std::string format_list(const std::vector<Weight>& values);
std::string format_list(const std::vector<int>& values);

// Vertices labelled "v: w"; vertices and arcs of `highlight` drawn bold.
std::string dag_to_dot(const WeightedDag& dag, const PathTuple* highlight = nullptr);

// AR quiver (or one slice of it) with labels "(i,j)" or "(i,j): w" when a
// lifted filling is given. Vertices at equal depth share a rank.
std::string quiver_to_dot(const ArQuiver& quiver, std::optional<int> slice = std::nullopt,
                          const LiftedFilling* weights = nullptr);

}  // namespace coxrsk::io
