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

#include "support/fixtures.h"

#include <stdexcept>

namespace mcube::testing {

RankTable grid(int r1, int r2, const std::vector<std::vector<int>>& rows) {
  if (rows.size() != static_cast<std::size_t>(r2) + 1) {
    throw std::invalid_argument("grid: wrong number of rows");
  }
  std::vector<int> values((r1 + 1) * (r2 + 1));
  for (int k = 0; k <= r2; ++k) {
    if (rows[k].size() != static_cast<std::size_t>(r1) + 1) {
      throw std::invalid_argument("grid: wrong row length");
    }
    for (int t = 0; t <= r1; ++t) values[t * (r2 + 1) + k] = rows[k][t];
  }
  return RankTable(Width{r1, r2}, values);
}

Matricube grid_matricube(int r1, int r2,
                         const std::vector<std::vector<int>>& rows) {
  return Matricube(grid(r1, r2, rows));
}

PointSet point_set(const Width& w, const std::vector<Point>& points) {
  return PointSet(w, points);
}

Matricube simple_43() {
  return grid_matricube(4, 3, {{0, 1, 2, 3, 4},
                               {1, 2, 2, 3, 4},
                               {2, 2, 2, 3, 4},
                               {3, 3, 3, 4, 5}});
}

Matricube nonsimple_43() {
  return grid_matricube(4, 3, {{0, 1, 2, 2, 3},
                               {1, 2, 2, 2, 3},
                               {2, 2, 2, 2, 3},
                               {3, 3, 3, 3, 4}});
}

Matricube circuits_54() {
  return grid_matricube(5, 4, {{0, 1, 2, 3, 4, 5},
                               {1, 1, 2, 3, 4, 5},
                               {2, 2, 3, 3, 4, 5},
                               {3, 3, 4, 4, 5, 6},
                               {4, 4, 4, 4, 5, 6}});
}

Matricube flats_54() {
  return grid_matricube(5, 4, {{0, 1, 2, 3, 4, 5},
                               {1, 2, 3, 3, 4, 5},
                               {2, 3, 4, 4, 4, 5},
                               {3, 4, 5, 5, 5, 6},
                               {4, 4, 5, 5, 5, 6}});
}

Matricube same_maximal_a() {
  return grid_matricube(2, 2, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
}

Matricube same_maximal_b() {
  return grid_matricube(2, 2, {{0, 1, 2}, {1, 1, 2}, {2, 2, 3}});
}

Matricube unequal_maximal() {
  return grid_matricube(2, 2, {{0, 1, 2}, {1, 2, 3}, {2, 2, 3}});
}

CubicalMatrix random_cubical_matrix(std::mt19937_64& rng, FieldSpec field) {
  CubicalMatrix c;
  c.field = field;
  c.m = static_cast<int>(rng() % 6);
  const int d = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < d; ++i) {
    const int len = static_cast<int>(rng() % 4);
    std::vector<Vector> dir;
    for (int j = 0; j < len; ++j) {
      Vector v;
      for (int k = 0; k < c.m; ++k) {
        if (field.kind() == FieldSpec::Kind::kPrime) {
          // Mostly small values so that dependencies show up.
          std::uint64_t e = rng() % 3 == 0 ? rng() % field.p() : rng() % 2;
          v.emplace_back(e);
        } else {
          v.emplace_back(Rational(static_cast<long>(rng() % 5) - 2,
                                  1 + static_cast<long>(rng() % 3)));
        }
      }
      dir.push_back(std::move(v));
    }
    c.vectors.push_back(std::move(dir));
  }
  return c;
}

}  // namespace mcube::testing
