/*
   Copyright 2026 The ccring Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CCRING_POLY_HPP_
#define CCRING_POLY_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ccring/gf.hpp"

namespace ccring {

inline constexpr int kZeroDegree = -1;
inline constexpr std::uint64_t kDefaultSeed = 0xC0DEC;

// Dense polynomial over a FieldCtx, little-endian, no trailing zeros.
// The FieldCtx must outlive every Poly that refers to it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldCtx& f) : ctx_(&f) {}
  Poly(const FieldCtx& f, std::vector<std::uint32_t> packed);
  Poly(const FieldCtx& f, const std::vector<FieldElem>& coeffs);
  // Integer coefficients mapped into the prime subfield.
  Poly(const FieldCtx& f, std::initializer_list<std::int64_t> ints);

  static Poly constant(const FieldElem& c);
  static Poly monomial(const FieldElem& c, std::size_t k);
  static Poly x(const FieldCtx& f) { return monomial(f.one(), 1); }

  const FieldCtx& field() const { return *ctx_; }
  const FieldCtx* ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& raw() const { return c_; }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  FieldElem coeff(std::size_t i) const;
  FieldElem lead() const;
  std::size_t size() const { return c_.size(); }

  FieldElem eval(const FieldElem& at) const;
  Poly monic() const;
  Poly derivative() const;
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElem& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElem& c) { return a *= c; }
  friend Poly operator*(const FieldElem& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();

  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g;
  Poly u;
  Poly v;
};

// g monic, u*a + v*b = g.
Xgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& a, const BigInt& e, const Poly& modulus);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
// a(g) mod modulus, Horner's rule.
Poly compose_mod(const Poly& a, const Poly& g, const Poly& modulus);

// x^deg(f) f(1/x).
Poly reciprocal(const Poly& f);

bool is_irreducible(const Poly& f);

struct Factorization {
  FieldElem unit;
  std::vector<std::pair<Poly, unsigned>> factors;
};

Factorization factor_squarefree(const Poly& f, std::uint64_t seed = kDefaultSeed);

// Degree first, then coefficient tuples from the constant term up.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace ccring

#endif  // CCRING_POLY_HPP_
