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

#ifndef MCUBE_POLYNOMIAL_H_
#define MCUBE_POLYNOMIAL_H_

#include <boost/multiprecision/gmp.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace mcube {

using BigInt = boost::multiprecision::mpz_int;

// Integer polynomial in x and y. Zero coefficients are never stored.
class TwoVarPolynomial {
 public:
  using Exponents = std::pair<int, int>;
  // Descending by degree in x, then in y.
  using Terms = std::map<Exponents, BigInt, std::greater<Exponents>>;

  TwoVarPolynomial() = default;
  static TwoVarPolynomial constant(const BigInt& c);
  static TwoVarPolynomial monomial(int dx, int dy, const BigInt& c = 1);
  // (x - 1)^a (y - 1)^b expanded with binomial coefficients.
  static TwoVarPolynomial shifted_monomial(int a, int b);

  const Terms& terms() const { return terms_; }
  BigInt coefficient(int dx, int dy) const;
  bool is_zero() const { return terms_.empty(); }

  // p(y, x).
  TwoVarPolynomial swapped() const;

  TwoVarPolynomial& operator+=(const TwoVarPolynomial& o);
  friend TwoVarPolynomial operator+(TwoVarPolynomial a,
                                    const TwoVarPolynomial& b) {
    return a += b;
  }
  friend TwoVarPolynomial operator*(const TwoVarPolynomial& a,
                                    const TwoVarPolynomial& b);
  bool operator==(const TwoVarPolynomial& o) const = default;

  // Terms by descending (dx, dy), e.g. "x^2 - 2*x*y + y^2 + 1".
  std::string to_string() const;

 private:
  void add_term(int dx, int dy, const BigInt& c);
  Terms terms_;
};

BigInt binomial(int n, int k);

}  // namespace mcube

#endif  // MCUBE_POLYNOMIAL_H_
