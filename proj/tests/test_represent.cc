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

#include <random>

#include "doctest.h"
#include "mcube/error.h"
#include "mcube/represent.h"
#include "mcube/transforms.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace mcube {
namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST_CASE("exact rank") {
  FieldSpec gf5 = FieldSpec::prime(5);
  CHECK(exact_rank({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, gf5) == 3);
  CHECK(exact_rank({vec({1, 2}), vec({2, 4})}, FieldSpec::rational()) == 1);
  CHECK(exact_rank({vec({1, 1}), vec({1, 0}), vec({0, 1})},
                   FieldSpec::prime(2)) == 2);
  CHECK(exact_rank({}, FieldSpec::rational()) == 0);
  CHECK(exact_rank({vec({1, 1}), vec({1, 3})}, FieldSpec::prime(2)) == 1);
  CHECK(exact_rank({vec({1, 1}), vec({1, 3})}, FieldSpec::rational()) == 2);
  CHECK(exact_rank({{Rational(1, 2), Rational(1)}, {Rational(1), Rational(2)}},
                   FieldSpec::rational()) == 1);
  CHECK_THROWS_AS(exact_rank({vec({1}), vec({1, 2})}, FieldSpec::rational()),
                  InvalidInput);
}

TEST_CASE("exact rank against the modular oracle") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + rng() % 5, m = 1 + rng() % 5, k = 1 + rng() % 4;
    std::vector<std::vector<long>> a(n, std::vector<long>(k)),
        b(k, std::vector<long>(m));
    for (auto& row : a) for (auto& e : row) e = static_cast<long>(rng() % 7) - 3;
    for (auto& row : b) for (auto& e : row) e = static_cast<long>(rng() % 7) - 3;
    std::vector<Vector> rows;
    std::vector<std::vector<std::int64_t>> ref;
    for (int r = 0; r < n; ++r) {
      Vector v;
      std::vector<std::int64_t> w;
      for (int c = 0; c < m; ++c) {
        long s = 0;
        for (int t = 0; t < k; ++t) s += a[r][t] * b[t][c];
        v.emplace_back(s);
        w.push_back(((s % 1000003) + 1000003) % 1000003);
      }
      rows.push_back(v);
      ref.push_back(w);
    }
    CHECK(exact_rank(rows, FieldSpec::rational()) ==
          oracle::rank_mod_p(ref, 1000003));
    for (auto& w : ref) for (auto& e : w) e %= 7;
    std::vector<Vector> mod7;
    for (const auto& w : ref) {
      Vector v;
      for (auto e : w) v.emplace_back(e);
      mod7.push_back(v);
    }
    CHECK(exact_rank(mod7, FieldSpec::prime(7)) == oracle::rank_mod_p(ref, 7));
  }
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::prime(10007).p() == 10007);
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), InvalidInput);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("matricubes from flags") {
  CubicalMatrix same;
  same.field = FieldSpec::prime(2);
  same.m = 2;
  same.vectors = {{vec({1, 0})}, {vec({1, 0})}};
  CHECK(matricube_from_flags(same).values() == std::vector<int>{0, 1, 1, 1});

  CubicalMatrix lines;
  lines.m = 2;
  lines.vectors = {{vec({1, 0})}, {vec({0, 1})}};
  CHECK(matricube_from_flags(lines) == uniform(Width{1, 1}, 2));

  CubicalMatrix zeros;
  zeros.m = 3;
  zeros.vectors = {{vec({0, 0, 0}), vec({0, 0, 0})}, {vec({0, 0, 0})}};
  CHECK(matricube_from_flags(zeros).values() == std::vector<int>(6, 0));

  CubicalMatrix bad = lines;
  bad.vectors[0][0] = vec({1});
  CHECK_THROWS_AS(matricube_from_flags(bad), InvalidInput);
  CubicalMatrix out_of_field = same;
  out_of_field.vectors[0][0] = vec({2, 0});
  CHECK_THROWS_AS(matricube_from_flags(out_of_field), InvalidInput);
}

TEST_CASE("general position") {
  bool found = false;
  for (std::uint64_t seed = 2023; seed < 2026 && !found; ++seed) {
    CubicalMatrix c = general_position_flags(Width{4, 3}, 5, 10007, seed);
    found = matricube_from_flags(c) == uniform(Width{4, 3}, 5);
    MESSAGE("general position (4,3) over GF(10007), seed " << seed << ": "
                                                           << found);
  }
  CHECK(found);

  found = false;
  for (std::uint64_t seed = 1; seed < 4 && !found; ++seed) {
    found = matricube_from_flags(general_position_flags(Width{1, 1}, 2, 101,
                                                        seed)) ==
            uniform(Width{1, 1}, 2);
  }
  CHECK(found);

  CubicalMatrix flat = general_position_flags(Width{2, 1}, 0, 7, 5);
  CHECK(matricube_from_flags(flat).values() == std::vector<int>(6, 0));
  CHECK(general_position_flags(Width{2}, 2, 7, 5) ==
        general_position_flags(Width{2}, 2, 7, 5));
}

TEST_CASE("random cubical matrices give matricubes") {
  std::mt19937_64 rng(4242);
  for (FieldSpec field : {FieldSpec::rational(), FieldSpec::prime(2),
                          FieldSpec::prime(10007)}) {
    for (int round = 0; round < 200; ++round) {
      CubicalMatrix c = testing::random_cubical_matrix(rng, field);
      Matricube m = matricube_from_flags(c);
      CHECK(validate_rank_axioms(m.table()).ok());
      CHECK(oracle::is_rank_function(c.width(), m.values()));

      bool prefixes_free = true;
      for (const auto& dir : c.vectors) {
        for (std::size_t j = 1; j <= dir.size(); ++j) {
          std::vector<Vector> prefix(dir.begin(), dir.begin() + j);
          if (exact_rank(prefix, field) != static_cast<int>(j)) {
            prefixes_free = false;
          }
        }
        if (dir.empty()) prefixes_free = false;
      }
      CHECK(is_simple(m) == prefixes_free);

      CubicalMatrix padded = c;
      padded.vectors[0].push_back(Vector(c.m, Rational(0)));
      padded.vectors[0].push_back(Vector(c.m, Rational(0)));
      Matricube back = deletion(deletion(matricube_from_flags(padded), 0), 0);
      CHECK(back == m);
    }
  }
}

}  // namespace
}  // namespace mcube
