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

#ifndef MCUBE_TESTS_SUPPORT_FIXTURES_H_
#define MCUBE_TESTS_SUPPORT_FIXTURES_H_

#include <random>
#include <vector>

#include "mcube/cryptomorph.h"
#include "mcube/matricube.h"
#include "mcube/represent.h"

namespace mcube::testing {

// Builds a table on width (r1, r2) from rows listed bottom-up: rows[k][t] is
// the value at (t, k), so the first axis runs horizontally.
RankTable grid(int r1, int r2, const std::vector<std::vector<int>>& rows);
Matricube grid_matricube(int r1, int r2,
                         const std::vector<std::vector<int>>& rows);
PointSet point_set(const Width& w, const std::vector<Point>& points);

// Simple matricube on (4,3) used throughout.
Matricube simple_43();
// Its non-simple companion on (4,3).
Matricube nonsimple_43();
// Simple matricube on (5,4) with three circuits.
Matricube circuits_54();
// Simple matricube on (5,4) with fourteen flats.
Matricube flats_54();
// Two matricubes on (2,2) with the same maximal independent.
Matricube same_maximal_a();
Matricube same_maximal_b();
// Matricube on (2,2) whose maximal independents have distinct ranks.
Matricube unequal_maximal();

// Up to two directions of up to three vectors in dimension at most 5. Prime
// entries are mostly 0 or 1.
CubicalMatrix random_cubical_matrix(std::mt19937_64& rng, FieldSpec field);

}  // namespace mcube::testing

#endif  // MCUBE_TESTS_SUPPORT_FIXTURES_H_
