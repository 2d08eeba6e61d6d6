// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCUBE_CRYPTOMORPH_H_
#define MCUBE_CRYPTOMORPH_H_

#include <cstddef>
#include <vector>

#include "mcube/hypercuboid.h"
#include "mcube/matricube.h"

namespace mcube {

// A subset of a hypercuboid, kept as a membership mask in canonical order.
class PointSet {
 public:
  PointSet() : member_(1, 0) {}
  explicit PointSet(Width width);
  explicit PointSet(Hypercuboid cube);
  // Throws InvalidInput for points outside the width.
  PointSet(Width width, const std::vector<Point>& points);

  const Hypercuboid& cube() const { return cube_; }
  const Width& width() const { return cube_.width(); }

  bool contains(const Point& p) const {
    return cube_.contains(p) && member_[cube_.index(p)];
  }
  bool contains_index(std::size_t index) const { return member_[index]; }
  void insert(const Point& p) { member_[cube_.index(p)] = 1; }
  void insert_index(std::size_t index) { member_[index] = 1; }
  void erase(const Point& p) { member_[cube_.index(p)] = 0; }
  void erase_index(std::size_t index) { member_[index] = 0; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Members in canonical order.
  std::vector<std::size_t> indices() const;
  std::vector<Point> points() const;

  bool operator==(const PointSet& o) const {
    return width() == o.width() && member_ == o.member_;
  }

 private:
  Hypercuboid cube_;
  std::vector<char> member_;
};

class FlatSet : public PointSet {
 public:
  using PointSet::PointSet;
  explicit FlatSet(PointSet s) : PointSet(std::move(s)) {}
};

class CircuitSet : public PointSet {
 public:
  using PointSet::PointSet;
  explicit CircuitSet(PointSet s) : PointSet(std::move(s)) {}
};

class IndependentSet : public PointSet {
 public:
  using PointSet::PointSet;
  explicit IndependentSet(PointSet s) : PointSet(std::move(s)) {}
};

// Flats.

FlatSet flats_of(const Matricube& m);
ValidationReport validate_flat_axioms(const FlatSet& f,
                                      ReportMode mode = ReportMode::kFirst);
// F*: every layer {x : x_i = t} meets the set. Also requires every r_i > 0.
bool check_flats_simple(const FlatSet& f);
// Grades the flats lattice by covering-graph depth from its minimum.
Matricube matricube_from_flats(const FlatSet& f);
// The least member above x, or nothing when no member is above x.
std::optional<Point> closure(const FlatSet& f, const Point& x);

// Circuits.

// All complements of flats of the dual. Contains the origin.
PointSet ccir_of(const Matricube& m);
CircuitSet circuits_of(const Matricube& m);
// Smallest superset closed under pairwise joins.
PointSet join_closure(const PointSet& s);
ValidationReport validate_circuit_axioms(const CircuitSet& c,
                                         ReportMode mode = ReportMode::kFirst);
// C*: no member lies on an axis. Also requires every r_i > 0.
bool check_circuits_simple(const CircuitSet& c);
Matricube matricube_from_circuits(const CircuitSet& c);

// Independents.

IndependentSet independents_of(const Matricube& m);
// Throws PreconditionError when a is not a member, a_i = 0, or the removal
// is missing.
Point removal(const IndependentSet& j, const Point& a, std::size_t i);

struct Orderability {
  bool orderable = true;
  // Size per canonical index, -1 outside the set.
  std::vector<int> sizes;
  // First member where the removal sequences disagree or a removal is missing.
  std::optional<Point> witness;
};
Orderability orderability(const IndependentSet& j);
bool is_orderable(const IndependentSet& j);
// Throws PreconditionError when a is not a member or j is not orderable.
int size(const IndependentSet& j, const Point& a);

ValidationReport validate_independent_axioms(
    const IndependentSet& j, ReportMode mode = ReportMode::kFirst);
// I*: every t e_i is a member. Also requires every r_i > 0.
bool check_independents_simple(const IndependentSet& j);
Matricube matricube_from_independents(const IndependentSet& j);

}  // namespace mcube

#endif  // MCUBE_CRYPTOMORPH_H_
