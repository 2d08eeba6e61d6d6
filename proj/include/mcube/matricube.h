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

#ifndef MCUBE_MATRICUBE_H_
#define MCUBE_MATRICUBE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcube/hypercuboid.h"

namespace mcube {

// One failed axiom instance. `points` and `directions` form the witness.
struct Violation {
  std::string axiom;
  std::vector<Point> points;
  std::vector<std::size_t> directions;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
  const Violation& first() const { return violations.front(); }
  std::string to_string() const;
};

enum class ReportMode { kFirst, kAll };

// Size guards for the exhaustive checkers.
struct CheckLimits {
  std::size_t local_max_points = 1'000'000;
  std::size_t pairwise_max_points = 10'000;
};

// An integer function on a hypercuboid, stored in canonical order. Not
// necessarily a rank function.
class RankTable {
 public:
  RankTable() : values_(1, 0) {}
  // Throws InvalidInput unless values.size() matches the hypercuboid.
  RankTable(Width width, std::vector<int> values);
  RankTable(Hypercuboid cube, std::vector<int> values);

  const Hypercuboid& cube() const { return cube_; }
  const Width& width() const { return cube_.width(); }
  const std::vector<int>& values() const { return values_; }
  int operator[](std::size_t index) const { return values_[index]; }
  int at(const Point& p) const { return values_[cube_.index(p)]; }

  bool operator==(const RankTable& o) const {
    return width() == o.width() && values_ == o.values_;
  }

 private:
  Hypercuboid cube_;
  std::vector<int> values_;
};

// A rank table satisfying R1-R3. Construction validates.
class Matricube {
 public:
  Matricube() = default;
  // Throws AxiomError carrying the first violation.
  explicit Matricube(RankTable table);
  Matricube(Width width, std::vector<int> values);

  // Skips validation. Only for tables that are rank functions by construction.
  static Matricube assume_valid(RankTable table);

  const RankTable& table() const { return table_; }
  const Hypercuboid& cube() const { return table_.cube(); }
  const Width& width() const { return table_.width(); }
  std::size_t dimension() const { return width().dimension(); }
  const std::vector<int>& values() const { return table_.values(); }

  int rank(const Point& x) const { return table_.at(x); }
  int rank_at(std::size_t index) const { return table_[index]; }
  int rank() const { return table_[cube().top()]; }

  bool operator==(const Matricube& o) const { return table_ == o.table_; }

 private:
  RankTable table_;
};

inline int rank(const Matricube& m, const Point& x) { return m.rank(x); }
inline int rank_of(const Matricube& m) { return m.rank(); }

// Checks R1, R2, R3 in that order. Monotonicity and submodularity are tested
// through unit steps and the diamond inequality, which are equivalent.
ValidationReport validate_rank_axioms(const RankTable& f,
                                      ReportMode mode = ReportMode::kFirst,
                                      const CheckLimits& limits = {});

bool is_simple(const Matricube& m);

// Diamond inequality f(x+e_i)-f(x) >= f(x+e_i+e_j)-f(x+e_j) for all i != j.
// The witness is the point x with directions (i, j).
ValidationReport check_diamond(const RankTable& f,
                               const CheckLimits& limits = {});

// f(a)+f(b) >= f(a v b)+f(a ^ b) over all pairs. Witness (a, b).
ValidationReport check_submodular_bruteforce(const RankTable& f,
                                             const CheckLimits& limits = {});

// The k-directional inequality at distance up to n. Witness (x, y) with the
// chosen directions and the offsets in `detail`.
ValidationReport check_multidirectional(const RankTable& f, int n, int k,
                                        const CheckLimits& limits = {});

Matricube uniform(const Width& width, int r);

bool check_dominated_by_uniform(const Matricube& m);

}  // namespace mcube

#endif  // MCUBE_MATRICUBE_H_
