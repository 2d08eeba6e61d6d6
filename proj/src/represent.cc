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

#include "mcube/represent.h"

#include <random>

#include "mcube/error.h"

namespace mcube {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

int rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = pow_mod(rows[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const u64 factor = rows[r][col] * inv % p;
      for (std::size_t k = col; k < cols; ++k) {
        rows[r][k] = (rows[r][k] + (p - factor) * rows[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_rational(std::vector<Vector> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) {
        rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw InvalidInput("field characteristic " + std::to_string(p) +
                       " is not a prime below 2^31");
  }
  return FieldSpec(Kind::kPrime, p);
}

Width CubicalMatrix::width() const {
  std::vector<int> w;
  for (const auto& dir : vectors) w.push_back(static_cast<int>(dir.size()));
  return Width(std::move(w));
}

void CubicalMatrix::check() const {
  if (m < 0) throw InvalidInput("negative ambient dimension");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const Vector& v : vectors[i]) {
      if (v.size() != static_cast<std::size_t>(m)) {
        throw InvalidInput("vector of length " + std::to_string(v.size()) +
                           " in direction " + std::to_string(i) +
                           ", expected " + std::to_string(m));
      }
      if (field.kind() != FieldSpec::Kind::kPrime) continue;
      for (const Rational& e : v) {
        if (denominator(e) != 1 || e < 0 || e >= Rational(field.p())) {
          throw InvalidInput("entry " + e.str() + " is not in GF(" +
                             std::to_string(field.p()) + ")");
        }
      }
    }
  }
}

int exact_rank(const std::vector<Vector>& rows, const FieldSpec& field) {
  for (const Vector& r : rows) {
    if (r.size() != rows.front().size()) {
      throw InvalidInput("rows of different lengths");
    }
  }
  if (field.kind() == FieldSpec::Kind::kRational) return rank_rational(rows);
  const u64 p = field.p();
  std::vector<std::vector<u64>> mod(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Rational& e : rows[r]) {
      // a/b mod p; the denominator must be invertible.
      boost::multiprecision::mpz_int num = numerator(e) % p;
      boost::multiprecision::mpz_int den = denominator(e) % p;
      if (num < 0) num += p;
      if (den == 0) {
        throw InvalidInput("entry " + e.str() + " has no value in GF(" +
                           std::to_string(p) + ")");
      }
      u64 n = num.convert_to<u64>();
      u64 dn = den.convert_to<u64>();
      mod[r].push_back(n * pow_mod(dn, p - 2, p) % p);
    }
  }
  return rank_mod_p(std::move(mod), p);
}

Matricube matricube_from_flags(const CubicalMatrix& c) {
  c.check();
  Hypercuboid cube(c.width());
  std::vector<int> values(cube.size());
  for (std::size_t x = 0; x < cube.size(); ++x) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < cube.dimension(); ++i) {
      for (int j = 0; j < cube.coord(x, i); ++j) rows.push_back(c.vectors[i][j]);
    }
    values[x] = exact_rank(rows, c.field);
  }
  return Matricube::assume_valid(RankTable(cube, std::move(values)));
}

CubicalMatrix general_position_flags(const Width& width, int r, std::uint64_t p,
                                     std::uint64_t seed) {
  if (r < 0) throw InvalidInput("negative ambient dimension");
  CubicalMatrix c;
  c.field = FieldSpec::prime(p);
  c.m = r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> entry(0, p - 1);
  for (int ri : width.entries()) {
    std::vector<Vector> dir;
    for (int j = 0; j < ri; ++j) {
      Vector v;
      for (int k = 0; k < r; ++k) v.emplace_back(entry(rng));
      dir.push_back(std::move(v));
    }
    c.vectors.push_back(std::move(dir));
  }
  return c;
}

}  // namespace mcube
