// Copyright 2026 The satprob Authors
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

#ifndef SATPROB_POLYNOMIAL_HPP
#define SATPROB_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "satprob/rational.hpp"

namespace satprob {

// A full assignment of parameter names to concrete values.
using Valuation = std::map<std::string, double>;

// Variable name -> exponent. No zero exponents are ever stored; the empty
// monomial is the constant term. std::map keeps a deterministic order.
using Monomial = std::map<std::string, int>;

// Sparse multivariate polynomial over exact rationals. Canonical form:
// no zero-coefficient term survives any operation, so structural equality
// coincides with mathematical equality. Immutable in practice: every
// operation returns a fresh value, which makes sharing across threads safe.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Rational& c);
  static Polynomial variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;

  std::set<std::string> variables() const;
  int total_degree() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(int exponent) const;  // exponent >= 0

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Evaluates at a full valuation in binary64. Throws Error if a variable
  // occurring in the polynomial is missing from the valuation.
  double eval(const Valuation& valuation) const;

 private:
  void prune();

  std::map<Monomial, Rational> terms_;
};

// Parses the expression grammar used inside model files:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := number | identifier | '(' expr ')' | '-' factor
//   number := integer ('/' positive-integer)? | decimal literal
//
// Decimal literals are converted exactly (0.25 -> 1/4). Unary minus binds
// tighter than '*': "-v*2" parses as (-v)*2. Identifiers must be members
// of `params`.
Polynomial parse_expr(std::string_view text,
                      const std::vector<std::string>& params);

// Canonical printing; parse_expr(to_text(p), ...) == p.
std::string to_text(const Polynomial& p);

}  // namespace satprob

#endif  // SATPROB_POLYNOMIAL_HPP
