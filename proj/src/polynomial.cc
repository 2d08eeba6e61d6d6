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

#include "mcube/polynomial.h"

#include <sstream>

namespace mcube {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

TwoVarPolynomial TwoVarPolynomial::constant(const BigInt& c) {
  return monomial(0, 0, c);
}

TwoVarPolynomial TwoVarPolynomial::monomial(int dx, int dy, const BigInt& c) {
  TwoVarPolynomial p;
  p.add_term(dx, dy, c);
  return p;
}

TwoVarPolynomial TwoVarPolynomial::shifted_monomial(int a, int b) {
  TwoVarPolynomial p;
  for (int i = 0; i <= a; ++i) {
    BigInt ci = binomial(a, i);
    if ((a - i) % 2) ci = -ci;
    for (int j = 0; j <= b; ++j) {
      BigInt cj = binomial(b, j);
      if ((b - j) % 2) cj = -cj;
      p.add_term(i, j, ci * cj);
    }
  }
  return p;
}

BigInt TwoVarPolynomial::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TwoVarPolynomial::add_term(int dx, int dy, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponents{dx, dy}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarPolynomial TwoVarPolynomial::swapped() const {
  TwoVarPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e.second, e.first, c);
  return p;
}

TwoVarPolynomial& TwoVarPolynomial::operator+=(const TwoVarPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

TwoVarPolynomial operator*(const TwoVarPolynomial& a,
                           const TwoVarPolynomial& b) {
  TwoVarPolynomial p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return p;
}

std::string TwoVarPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    auto var = [&mono](char v, int deg) {
      if (deg == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (deg > 1) mono += '^' + std::to_string(deg);
    };
    var('x', e.first);
    var('y', e.second);

    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace mcube
