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

#ifndef CCRING_CHAIN_HPP_
#define CCRING_CHAIN_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ccring/poly.hpp"

namespace ccring {

class ChainElem;

// F_q[x]/(f^e) with f monic irreducible.
class ChainCtx {
 public:
  using Ptr = std::shared_ptr<const ChainCtx>;

  static Ptr make(FieldCtx::Ptr field, const Poly& f, unsigned e);

  const FieldCtx& field() const { return *field_; }
  const FieldCtx::Ptr& field_ptr() const { return field_; }
  const Poly& f() const { return f_; }
  unsigned d() const { return d_; }
  unsigned e() const { return e_; }
  const Poly& modulus() const { return f_pows_[e_]; }
  // f^k as a polynomial, 0 <= k <= e (unreduced for k = e).
  const Poly& f_pow(unsigned k) const;
  // Number of elements, q^(d e).
  BigInt order() const;

  ChainElem elem(const Poly& p) const;
  ChainElem zero() const;
  ChainElem one() const;
  // f^k as a ring element; zero for k >= e.
  ChainElem uniformizer(unsigned k) const;

  bool same_as(const ChainCtx& o) const {
    return this == &o || (field_->same_as(*o.field_) && e_ == o.e_ && f_ == o.f_);
  }

 private:
  ChainCtx(FieldCtx::Ptr field, const Poly& f, unsigned e);

  FieldCtx::Ptr field_;
  Poly f_;
  unsigned d_;
  unsigned e_;
  std::vector<Poly> f_pows_;
};

class ChainElem {
 public:
  ChainElem() = default;
  ChainElem(const ChainCtx* ctx, Poly reduced) : ctx_(ctx), v_(std::move(reduced)) {}

  const ChainCtx& ring() const;
  const ChainCtx* ctx() const { return ctx_; }
  const Poly& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_unit() const;

  ChainElem operator-() const;
  ChainElem& operator+=(const ChainElem& o);
  ChainElem& operator-=(const ChainElem& o);
  ChainElem& operator*=(const ChainElem& o);

  friend ChainElem operator+(ChainElem a, const ChainElem& b) { return a += b; }
  friend ChainElem operator-(ChainElem a, const ChainElem& b) { return a -= b; }
  friend ChainElem operator*(ChainElem a, const ChainElem& b) { return a *= b; }
  friend bool operator==(const ChainElem& a, const ChainElem& b);
  friend bool operator!=(const ChainElem& a, const ChainElem& b) { return !(a == b); }

 private:
  const ChainCtx* ctx_ = nullptr;
  Poly v_;
};

// Digits b_0..b_{e-1}, each of degree < d, with a = sum b_k f^k.
std::vector<Poly> f_adic_expand(const ChainElem& a);
ChainElem recompose(const ChainCtx& ctx, const std::vector<Poly>& digits);
// Least k with a nonzero digit; e for zero.
unsigned valuation(const ChainElem& a);
// a with every digit of index >= k cleared.
ChainElem truncate(const ChainElem& a, unsigned k);

int ceil_half(int x);

// The set f^lo (K / f^hi): sums of c_k f^k for lo <= k < hi.
class ResidueSet {
 public:
  ResidueSet(const ChainCtx& ctx, unsigned lo, unsigned hi);

  unsigned lo() const { return lo_; }
  unsigned hi() const { return hi_; }
  BigInt size() const;
  ChainElem at(const BigInt& index) const;
  bool contains(const ChainElem& a) const;

  // Odometer over the set; the lowest digit position varies fastest.
  class Cursor;
  Cursor cursor() const;

 private:
  friend class Cursor;
  Poly digit_poly(const std::uint32_t* idx) const;

  const ChainCtx* ctx_;
  unsigned lo_;
  unsigned hi_;
};

class ResidueSet::Cursor {
 public:
  explicit Cursor(const ResidueSet& set);
  const ChainElem& value() const { return value_; }
  bool advance();
  void reset();

 private:
  void rebuild();
  ResidueSet set_;
  std::vector<std::uint32_t> digits_;
  ChainElem value_;
};

inline ResidueSet::Cursor ResidueSet::cursor() const { return Cursor(*this); }

}  // namespace ccring

#endif  // CCRING_CHAIN_HPP_
