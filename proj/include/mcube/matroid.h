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

#ifndef MCUBE_MATROID_H_
#define MCUBE_MATROID_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mcube/matricube.h"

namespace mcube {

inline constexpr int kMaxSetFunctionElements = 20;
inline constexpr int kMaxFlagGround = 16;
inline constexpr int kMaxNaturalCopies = 20;

// A rank table on the subsets of a labelled ground set. Bit j of the mask is
// element j. Witnesses in reports encode subsets as 0/1 points.
class SetFunction {
 public:
  SetFunction() : rank_(1, 0) {}
  // Throws InvalidInput unless rank has 2^|ground| entries, SizeLimitError
  // above kMaxSetFunctionElements elements.
  SetFunction(std::vector<std::string> ground, std::vector<int> rank);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<int>& ranks() const { return rank_; }
  int size() const { return static_cast<int>(ground_.size()); }
  std::uint32_t full() const { return (1u << ground_.size()) - 1; }
  int rank(std::uint32_t subset) const { return rank_[subset]; }
  int rank() const { return rank_.back(); }

  bool operator==(const SetFunction&) const = default;

 private:
  std::vector<std::string> ground_;
  std::vector<int> rank_;
};

class Matroid : public SetFunction {
 public:
  using SetFunction::SetFunction;
};

class Polymatroid : public SetFunction {
 public:
  using SetFunction::SetFunction;
};

Point subset_point(std::uint32_t subset, int n);

// rank(empty) = 0, unit steps, and the local submodular inequality; together
// equivalent to the matroid rank axioms.
ValidationReport validate_matroid(const Matroid& m,
                                  ReportMode mode = ReportMode::kFirst);
// rank(empty) = 0, monotone, submodular.
ValidationReport validate_polymatroid(const Polymatroid& p,
                                      ReportMode mode = ReportMode::kFirst);

// Ground is {i : a_i < r_i} labelled by direction index, with
// rho(X) = rk(a + sum of e_i over X) - rk(a).
Matroid local_matroid(const Matricube& m, const Point& a);

// One matroid per point, in canonical order.
struct CoherentComplex {
  Width width;
  std::vector<Matroid> matroids;

  const Matroid& at(const Point& a) const;
  bool operator==(const CoherentComplex&) const = default;
};

CoherentComplex coherent_complex_of(const Matricube& m);
// Matroid axioms and ground sets, then CC1, then CC2. Witnesses are (a, i).
ValidationReport validate_coherent(const CoherentComplex& cc,
                                   ReportMode mode = ReportMode::kFirst);
// rho_a(i) + rho_{a+e_i}(j) = rho_a(j) + rho_{a+e_j}(i) on every unit square.
ValidationReport check_path_independence(const CoherentComplex& cc);
// Sums local ranks along the staircase that raises coordinate 0 first, then
// coordinate 1, and so on. Throws AxiomError on an invalid complex.
Matricube matricube_from_coherent(const CoherentComplex& cc);

// Ground: the points t e_i for every i and 0 <= t <= r_i, labelled "t_i",
// block by block. rho(S) = rk(join of S).
Polymatroid natural_polymatroid(const Matricube& m);
// Each element e becomes rho(e) copies "label#k";
// rho^(Y) = min over S of rho(S) + |Y minus the copies of S|.
Matroid natural_matroid(const Polymatroid& p);

struct FlagMatroid {
  std::vector<std::string> ground;
  std::vector<Matroid> constituents;

  bool operator==(const FlagMatroid&) const = default;
};

// Ground sets, matroid axioms per constituent, quotients between consecutive
// constituents, then rank(M_j) = j.
ValidationReport validate_flag_matroid(const FlagMatroid& fm,
                                       ReportMode mode = ReportMode::kFirst);

// min over T in U of |U - T| + sum of r_i(T).
int matroid_union_rank(const std::vector<Matroid>& ms, std::uint32_t subset);

// rk(x) = rank of the union of the x_i-th constituents.
Matricube matricube_from_flag_matroids(const std::vector<FlagMatroid>& fms);

}  // namespace mcube

#endif  // MCUBE_MATROID_H_
