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

#ifndef MCUBE_REPRESENT_H_
#define MCUBE_REPRESENT_H_

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "mcube/matricube.h"

namespace mcube {

using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

class FieldSpec {
 public:
  enum class Kind { kRational, kPrime };

  static FieldSpec rational() { return FieldSpec(Kind::kRational, 0); }
  // Throws InvalidInput unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// Flags in a space of dimension m: vectors[i][j] is the (j+1)-th vector of
// direction i. Prime-field entries are integers in [0, p).
struct CubicalMatrix {
  FieldSpec field = FieldSpec::rational();
  int m = 0;
  std::vector<std::vector<Vector>> vectors;

  Width width() const;
  // Throws InvalidInput on wrong lengths or entries outside the field.
  void check() const;
  bool operator==(const CubicalMatrix&) const = default;
};

// Row rank over the field. Rows must share one length.
int exact_rank(const std::vector<Vector>& rows, const FieldSpec& field);

// rk(x) = dim of the span of the first x_i vectors of every direction i.
Matricube matricube_from_flags(const CubicalMatrix& c);

// Uniform entries in [0, p) from a generator seeded with `seed`, in ambient
// dimension r.
CubicalMatrix general_position_flags(const Width& width, int r, std::uint64_t p,
                                     std::uint64_t seed);

}  // namespace mcube

#endif  // MCUBE_REPRESENT_H_
