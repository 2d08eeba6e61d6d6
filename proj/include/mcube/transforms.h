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

#ifndef MCUBE_TRANSFORMS_H_
#define MCUBE_TRANSFORMS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "mcube/cryptomorph.h"
#include "mcube/matricube.h"
#include "mcube/polynomial.h"

namespace mcube {

// rk*(x) = |x| + rk(r - x) - rk(M).
Matricube dual(const Matricube& m);

// Restricts to x_i < r_i. Throws PreconditionError when r_i = 0.
Matricube deletion(const Matricube& m, std::size_t i);

// rk'(x) = rk(x + e_i) - rk(e_i). Throws PreconditionError when r_i = 0.
Matricube contraction(const Matricube& m, std::size_t i);

enum class MinorOp { kDelete, kContract };

struct MinorStep {
  MinorOp op;
  // Direction in the width current at this step.
  std::size_t direction;
};

// Parses "d0,c1,..." into steps. Throws InvalidInput.
std::vector<MinorStep> parse_minor_ops(const std::string& text);
Matricube minor(const Matricube& m, const std::vector<MinorStep>& steps);

Matricube direct_sum(const Matricube& a, const Matricube& b);

bool is_loop(const Matricube& m, std::size_t i);
// Computed as a loop of the dual and through the rank of the deletion; the
// two must agree.
bool is_coloop(const Matricube& m, std::size_t i);

TwoVarPolynomial tutte(const Matricube& m);

enum class BasisKind { kA, kB, kC, kD, kE, kF };

// Accepts "a".."f". Throws InvalidInput.
BasisKind parse_basis_kind(const std::string& tag);
PointSet basis_candidates(const Matricube& m, BasisKind kind);

}  // namespace mcube

#endif  // MCUBE_TRANSFORMS_H_
