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

#include "mcube/permarray.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "mcube/error.h"

namespace mcube {

DotArray::DotArray(int r, std::size_t d) : r_(r) {
  if (r < 0) throw InvalidInput("dot array width must be non-negative");
  if (d == 0) throw InvalidInput("dot array dimension must be positive");
  cube_ = Hypercuboid(Width(std::vector<int>(d, r)));
  dots_.assign(cube_.size(), 0);
}

DotArray::DotArray(int r, std::size_t d, const std::vector<Point>& dots)
    : DotArray(r, d) {
  for (const Point& p : dots) {
    if (!cube_.contains(p)) {
      throw InvalidInput("dot " + to_string(p) + " is outside [" +
                         std::to_string(r) + "]^" + std::to_string(d));
    }
    dot(p);
  }
}

std::vector<Point> DotArray::dots() const {
  std::vector<Point> out;
  for (std::size_t x : dot_indices()) out.push_back(cube_.point(x));
  return out;
}

std::vector<std::size_t> DotArray::dot_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < dots_.size(); ++x) {
    if (dots_[x]) out.push_back(x);
  }
  return out;
}

int rank_along(const DotArray& p, const Point& x, std::size_t j) {
  const Hypercuboid& c = p.cube();
  if (!c.contains(x)) {
    throw InvalidInput("point " + to_string(x) + " is outside the array");
  }
  if (j >= p.d()) {
    throw InvalidInput("axis " + std::to_string(j) + " out of range");
  }
  std::vector<char> seen(p.r() + 1, 0);
  for (const Point& y : p.dots()) {
    if (leq(x, y)) seen[y[j]] = 1;
  }
  int n = 0;
  for (char s : seen) n += s;
  return n;
}

std::vector<std::vector<int>> rank_tables(const DotArray& p) {
  const Hypercuboid& c = p.cube();
  const std::size_t words = static_cast<std::size_t>(p.r()) / 64 + 1;
  if (c.size() * words > kMaxLayerWords) {
    throw SizeLimitError("dot array too large for layer tables");
  }
  std::vector<std::vector<int>> out(p.d(), std::vector<int>(c.size()));
  // Layers seen in P[x], one bit per t.
  std::vector<std::uint64_t> bits(c.size() * words);
  for (std::size_t j = 0; j < p.d(); ++j) {
    for (std::size_t x = c.size(); x-- > 0;) {
      std::uint64_t* b = &bits[x * words];
      std::fill(b, b + words, 0);
      if (p.dotted_index(x)) {
        const int t = c.coord(x, j);
        b[t / 64] |= std::uint64_t{1} << (t % 64);
      }
      for (std::size_t i = 0; i < p.d(); ++i) {
        if (auto y = c.up(x, i)) {
          const std::uint64_t* u = &bits[*y * words];
          for (std::size_t w = 0; w < words; ++w) b[w] |= u[w];
        }
      }
      int n = 0;
      for (std::size_t w = 0; w < words; ++w) n += std::popcount(b[w]);
      out[j][x] = n;
    }
  }
  return out;
}

ValidationReport check_totally_rankable(const DotArray& p) {
  ValidationReport r;
  std::vector<std::vector<int>> ranks = rank_tables(p);
  const Hypercuboid& c = p.cube();
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t j = 1; j < p.d(); ++j) {
      if (ranks[j][x] != ranks[0][x]) {
        r.violations.push_back(
            {"rankable", {c.point(x)}, {0, j},
             "ranks " + std::to_string(ranks[0][x]) + " and " +
                 std::to_string(ranks[j][x])});
        return r;
      }
    }
  }
  return r;
}

bool is_totally_rankable(const DotArray& p) {
  return check_totally_rankable(p).ok();
}

int rank_of_array(const DotArray& p) {
  const Point o = origin(p.d());
  const int k = rank_along(p, o, 0);
  for (std::size_t j = 1; j < p.d(); ++j) {
    if (rank_along(p, o, j) != k) {
      throw PreconditionError("dot array is not rankable");
    }
  }
  return k;
}

PointSet redundant_positions(const DotArray& p) {
  const Hypercuboid& c = p.cube();
  const std::vector<std::size_t> dots = p.dot_indices();
  PointSet out(c);
  const std::size_t d = p.d();
  std::vector<int> low(d);
  for (std::size_t x = 0; x < c.size(); ++x) {
    int count = 0;
    std::fill(low.begin(), low.end(), p.r() + 1);
    for (std::size_t y : dots) {
      if (y == x || !c.leq(x, y)) continue;
      bool shares = false;
      for (std::size_t k = 0; k < d && !shares; ++k) {
        shares = c.coord(x, k) == c.coord(y, k);
      }
      if (!shares) continue;
      ++count;
      for (std::size_t k = 0; k < d; ++k) {
        low[k] = std::min(low[k], c.coord(y, k));
      }
    }
    if (count < 2) continue;
    bool meets = true;
    for (std::size_t k = 0; k < d && meets; ++k) {
      meets = low[k] == c.coord(x, k);
    }
    if (meets) out.insert_index(x);
  }
  return out;
}

bool is_permutation_array(const DotArray& p) {
  if (!is_totally_rankable(p) || rank_of_array(p) != p.r() + 1) return false;
  const PointSet redundant = redundant_positions(p);
  for (std::size_t x : p.dot_indices()) {
    if (redundant.contains_index(x)) return false;
  }
  return true;
}

Matricube matricube_from_permarray(const DotArray& p) {
  if (!is_permutation_array(p)) {
    throw PreconditionError("not a permutation array");
  }
  std::vector<int> ranks = std::move(rank_tables(p)[0]);
  for (int& v : ranks) v = p.r() + 1 - v;
  return Matricube(RankTable(p.cube(), std::move(ranks)));
}

DotArray permarray_from_matricube(const Matricube& m) {
  if (!is_simple(m)) throw PreconditionError("not simple");
  const Width& w = m.width();
  if (w.dimension() == 0) throw PreconditionError("not a hypercube");
  const int r = w[0];
  for (int e : w.entries()) {
    if (e != r) throw PreconditionError("not a hypercube");
  }
  if (m.rank() != r && m.rank() != r + 1) {
    throw PreconditionError("rank not r or r+1");
  }
  DotArray pm(r, w.dimension());
  const Hypercuboid& c = m.cube();
  for (std::size_t x : flats_of(m).indices()) {
    if (x != c.top()) pm.dot(c.point(x));
  }
  if (m.rank() == r) pm.dot(c.point(c.top()));
  DotArray p = pm;
  for (std::size_t x : redundant_positions(pm).indices()) {
    p.undot(c.point(x));
  }
  return p;
}

}  // namespace mcube
