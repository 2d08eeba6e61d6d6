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

#ifndef MCUBE_PERMARRAY_H_
#define MCUBE_PERMARRAY_H_

#include <cstddef>
#include <vector>

#include "mcube/cryptomorph.h"
#include "mcube/hypercuboid.h"
#include "mcube/matricube.h"

namespace mcube {

// Bound on points times layer words for the layer tables below.
inline constexpr std::size_t kMaxLayerWords = 20'000'000;

// Dotted positions in the hypercube [r]^d.
class DotArray {
 public:
  DotArray() : DotArray(0, 1) {}
  // Throws InvalidInput for r < 0 or d = 0.
  DotArray(int r, std::size_t d);
  // Throws InvalidInput for dots outside [r]^d.
  DotArray(int r, std::size_t d, const std::vector<Point>& dots);

  int r() const { return r_; }
  std::size_t d() const { return cube_.dimension(); }
  const Hypercuboid& cube() const { return cube_; }
  const Width& width() const { return cube_.width(); }

  bool dotted(const Point& p) const { return dots_[cube_.index(p)]; }
  bool dotted_index(std::size_t index) const { return dots_[index]; }
  void dot(const Point& p) { dots_[cube_.index(p)] = 1; }
  void undot(const Point& p) { dots_[cube_.index(p)] = 0; }
  // Canonical order.
  std::vector<Point> dots() const;
  std::vector<std::size_t> dot_indices() const;

  bool operator==(const DotArray& o) const {
    return r_ == o.r_ && width() == o.width() && dots_ == o.dots_;
  }

 private:
  int r_;
  Hypercuboid cube_;
  std::vector<char> dots_;
};

// Number of layers t >= x_j of P[x] along axis j holding a dot.
int rank_along(const DotArray& p, const Point& x, std::size_t j);

// rank_along for every point, indexed [j][canonical index]. Throws
// SizeLimitError beyond kMaxLayerWords.
std::vector<std::vector<int>> rank_tables(const DotArray& p);

// Every upper principal subarray is rankable. Witness (x) with axes (i, j).
ValidationReport check_totally_rankable(const DotArray& p);
bool is_totally_rankable(const DotArray& p);
// Common rank at the origin. Throws PreconditionError when P is not rankable.
int rank_of_array(const DotArray& p);

// x is redundant when the dots y != x above x sharing a coordinate with x
// number at least two and meet exactly at x.
PointSet redundant_positions(const DotArray& p);

// Totally rankable of rank r + 1 with no redundant dot.
bool is_permutation_array(const DotArray& p);

// rk(a) = r + 1 - rank(P[a]). Throws PreconditionError unless P is a
// permutation array.
Matricube matricube_from_permarray(const DotArray& p);

// Dots on the flats other than the top, on the top when rank(m) = r, with the
// redundant positions removed. Throws PreconditionError naming the failed
// condition: "not simple", "not a hypercube", "rank not r or r+1".
DotArray permarray_from_matricube(const Matricube& m);

}  // namespace mcube

#endif  // MCUBE_PERMARRAY_H_
