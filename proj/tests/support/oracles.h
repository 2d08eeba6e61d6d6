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

#ifndef MCUBE_TESTS_SUPPORT_ORACLES_H_
#define MCUBE_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "mcube/hypercuboid.h"

// Reference implementations that work from definitions on explicit point
// lists. They share no code with the library beyond Point and Width.
namespace mcube::oracle {

using Table = std::vector<int>;

// All points of a width in canonical order, built by counting.
std::vector<Point> points_of(const Width& w);
std::size_t index_of(const Width& w, const Point& p);

// R1-R3 checked literally: axis steps, all comparable pairs, all pairs.
bool is_rank_function(const Width& w, const Table& f);

// Every function with 0 <= f(x) <= |x|, passed to `visit`.
void for_each_bounded_function(const Width& w,
                               const std::function<void(const Table&)>& visit);

// Every monotone table with unit steps and f(0) = 0.
void for_each_monotone_unit_step(
    const Width& w, const std::function<void(const Table&)>& visit);

// All rank functions on w, in lexicographic order of the flat table.
std::vector<Table> all_rank_functions(const Width& w);

// Flats: rank strictly grows to every point strictly above.
std::vector<Point> flats(const Width& w, const Table& f);
// Independents: rank strictly drops to every point strictly below.
std::vector<Point> independents(const Width& w, const Table& f);

Table dual(const Width& w, const Table& f);

// Tutte sum evaluated at an integer point, without expansion.
std::int64_t tutte_at(const Width& w, const Table& f, std::int64_t x,
                      std::int64_t y);

// Matroid rank of the union of matroids given as rank tables on n elements,
// by enumerating independent sets of each and taking maximal unions.
int union_rank_bruteforce(int n, const std::vector<std::vector<int>>& ranks,
                          std::uint32_t subset);

// Brute-force matroid axioms on a subset rank table.
bool is_matroid(int n, const std::vector<int>& rank);

// Rank of a matrix over GF(p) by naive elimination on int64.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

}  // namespace mcube::oracle

#endif  // MCUBE_TESTS_SUPPORT_ORACLES_H_
