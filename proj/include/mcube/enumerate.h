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

#ifndef MCUBE_ENUMERATE_H_
#define MCUBE_ENUMERATE_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mcube/matricube.h"

namespace mcube {

inline constexpr std::size_t kEnumerateMaxPoints = 24;
inline constexpr std::size_t kBruteforceMaxPoints = 12;

struct EnumerateOptions {
  bool simple = false;
  std::optional<int> rank;
};

// Depth-first over the points in canonical order, pruning with monotonicity,
// unit steps and the diamond inequality. Visits tables in lexicographic
// order. Throws SizeLimitError above kEnumerateMaxPoints points.
void for_each_matricube(const Width& width, const EnumerateOptions& options,
                        const std::function<void(const Matricube&)>& visit);

std::vector<Matricube> enumerate_matricubes(const Width& width,
                                            const EnumerateOptions& options = {});

// Filters every table with 0 <= f(x) <= |x| through R1-R3 checked pair by
// pair. Same output as enumerate_matricubes. Throws SizeLimitError above
// kBruteforceMaxPoints points.
std::vector<Matricube> bruteforce_matricubes(
    const Width& width, const EnumerateOptions& options = {});

}  // namespace mcube

#endif  // MCUBE_ENUMERATE_H_
