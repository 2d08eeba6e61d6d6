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

#include "mcube/enumerate.h"

#include <algorithm>

#include "mcube/error.h"

namespace mcube {

namespace {

class Search {
 public:
  Search(const Width& width, const EnumerateOptions& options,
         const std::function<void(const Matricube&)>& visit)
      : cube_(width), options_(options), visit_(visit), f_(cube_.size(), 0) {
    const std::size_t d = cube_.dimension();
    axis_.assign(cube_.size(), -1);
    for (std::size_t x = 0; x < cube_.size(); ++x) {
      int nonzero = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (cube_.coord(x, i) > 0) {
          ++nonzero;
          axis_[x] = cube_.coord(x, i);
        }
      }
      if (nonzero != 1) axis_[x] = -1;
    }
  }

  void run() {
    if (options_.simple) {
      for (int r : cube_.width().entries()) {
        if (r == 0) return;
      }
    }
    f_[0] = 0;
    descend(1);
  }

 private:
  void descend(std::size_t x) {
    if (x == cube_.size()) {
      if (options_.rank && f_.back() != *options_.rank) return;
      visit_(Matricube::assume_valid(RankTable(cube_, f_)));
      return;
    }
    const std::size_t d = cube_.dimension();
    int lo = 0;
    int hi = 1 << 30;
    for (std::size_t i = 0; i < d; ++i) {
      auto y = cube_.down(x, i);
      if (!y) continue;
      lo = std::max(lo, f_[*y]);
      hi = std::min(hi, f_[*y] + 1);
    }
    for (std::size_t i = 0; i < d; ++i) {
      auto xi = cube_.down(x, i);
      if (!xi) continue;
      for (std::size_t j = i + 1; j < d; ++j) {
        auto xj = cube_.down(x, j);
        if (!xj) continue;
        std::size_t z = *xi - cube_.stride(j);
        hi = std::min(hi, f_[*xi] + f_[*xj] - f_[z]);
      }
    }
    if (options_.simple && axis_[x] >= 0) {
      lo = std::max(lo, axis_[x]);
      hi = std::min(hi, axis_[x]);
    }
    if (options_.rank) hi = std::min(hi, *options_.rank);
    for (int v = lo; v <= hi; ++v) {
      f_[x] = v;
      descend(x + 1);
    }
  }

  Hypercuboid cube_;
  const EnumerateOptions& options_;
  const std::function<void(const Matricube&)>& visit_;
  std::vector<int> f_;
  // t when the point is t e_i for some i and t > 0, else -1.
  std::vector<int> axis_;
};

bool matches(const Matricube& m, const EnumerateOptions& options) {
  if (options.rank && m.rank() != *options.rank) return false;
  return !options.simple || is_simple(m);
}

// R1-R3 read off the definitions, with no local shortcuts.
bool satisfies_axioms(const Hypercuboid& c, const std::vector<int>& f) {
  if (f[0] != 0) return false;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (int t = 1; t <= c.width()[i]; ++t) {
      int s = f[c.axis_index(i, t)] - f[c.axis_index(i, t - 1)];
      if (s != 0 && s != 1) return false;
    }
  }
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (c.leq(a, b) && f[a] > f[b]) return false;
      if (f[a] + f[b] < f[c.join(a, b)] + f[c.meet(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_matricube(const Width& width, const EnumerateOptions& options,
                        const std::function<void(const Matricube&)>& visit) {
  Hypercuboid c(width);
  if (c.size() > kEnumerateMaxPoints) {
    throw SizeLimitError("enumeration is limited to " +
                         std::to_string(kEnumerateMaxPoints) + " points");
  }
  Search(width, options, visit).run();
}

std::vector<Matricube> enumerate_matricubes(const Width& width,
                                            const EnumerateOptions& options) {
  std::vector<Matricube> out;
  for_each_matricube(width, options,
                     [&out](const Matricube& m) { out.push_back(m); });
  return out;
}

std::vector<Matricube> bruteforce_matricubes(const Width& width,
                                             const EnumerateOptions& options) {
  Hypercuboid c(width);
  if (c.size() > kBruteforceMaxPoints) {
    throw SizeLimitError("brute-force enumeration is limited to " +
                         std::to_string(kBruteforceMaxPoints) + " points");
  }
  std::vector<Matricube> out;
  std::vector<int> f(c.size(), 0);
  while (true) {
    if (satisfies_axioms(c, f)) {
      Matricube m = Matricube::assume_valid(RankTable(c, f));
      if (matches(m, options)) out.push_back(std::move(m));
    }
    std::size_t k = f.size();
    while (k > 0 && f[k - 1] == c.l1(k - 1)) f[--k] = 0;
    if (k == 0) break;
    ++f[k - 1];
  }
  return out;
}

}  // namespace mcube
