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

#ifndef CCRING_GF_HPP_
#define CCRING_GF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccring/error.hpp"

namespace ccring {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

class FieldCtx;

// An element of F_{p^m}. The value is packed as sum c_i p^i where c_i is the
// coefficient of the i-th power of the field generator.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::uint32_t packed) : ctx_(ctx), v_(packed) {}

  const FieldCtx& field() const;
  const FieldCtx* ctx() const { return ctx_; }
  std::uint32_t packed() const { return v_; }
  std::vector<std::uint32_t> coeffs() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

FieldElem inverse(const FieldElem& a);
// a^0 = 1 for every a, including a = 0.
FieldElem pow(const FieldElem& a, const BigInt& e);
// The unique lambda0 with lambda0^(p^s) = lambda.
FieldElem ps_root(const FieldElem& lambda, unsigned s);

// Order used for canonical sorting: coefficient tuples compared from the
// constant coefficient up.
bool canonical_less(const FieldElem& a, const FieldElem& b);
std::uint32_t canonical_index(const FieldElem& a);

class FieldCtx {
 public:
  using Ptr = std::shared_ptr<const FieldCtx>;

  // modulus: coefficients over F_p, little-endian, monic of degree m.
  static Ptr make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return FieldElem(this, 0); }
  FieldElem one() const { return FieldElem(this, 1); }
  // The integer n mapped into the prime subfield.
  FieldElem from_int(std::int64_t n) const;
  FieldElem from_coeffs(const std::vector<std::uint32_t>& c) const;
  FieldElem from_packed(std::uint32_t v) const;
  FieldElem from_canonical_index(std::uint32_t idx) const;
  // Class of the variable in F_p[y]/(modulus); equals 0 when m = 1.
  FieldElem generator() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t digit(std::uint32_t v, std::uint32_t i) const;

  bool same_as(const FieldCtx& o) const {
    return this == &o || (p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_);
  }
  std::string describe() const;

 private:
  FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

void check_same_field(const FieldCtx* a, const FieldCtx* b);

bool is_prime(std::uint64_t n);

}  // namespace ccring

#endif  // CCRING_GF_HPP_
