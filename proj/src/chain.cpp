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

#include "ccring/chain.hpp"

#include <algorithm>

namespace ccring {

ChainCtx::Ptr ChainCtx::make(FieldCtx::Ptr field, const Poly& f, unsigned e) {
  if (!field) throw Error(ErrorCode::kContextMismatch, "missing field");
  check_same_field(field.get(), f.ctx());
  if (e < 1) throw Error(ErrorCode::kRangeError, "nilpotency index must be positive");
  if (f.degree() < 1 || !f.lead().is_one()) throw Error(ErrorCode::kBadModulus, "uniformizer must be monic of positive degree");
  if (!is_irreducible(f)) throw Error(ErrorCode::kReducibleModulus, "uniformizer must be irreducible");
  return Ptr(new ChainCtx(std::move(field), f, e));
}

ChainCtx::ChainCtx(FieldCtx::Ptr field, const Poly& f, unsigned e)
    : field_(std::move(field)), f_(f), d_(static_cast<unsigned>(f.degree())), e_(e) {
  f_pows_.reserve(e + 1);
  f_pows_.push_back(Poly::constant(field_->one()));
  for (unsigned k = 1; k <= e; ++k) f_pows_.push_back(f_pows_.back() * f_);
}

const Poly& ChainCtx::f_pow(unsigned k) const {
  if (k > e_) throw Error(ErrorCode::kRangeError, "power of uniformizer beyond nilpotency index");
  return f_pows_[k];
}

BigInt ChainCtx::order() const { return big_pow(field_->q(), static_cast<std::uint64_t>(d_) * e_); }

ChainElem ChainCtx::elem(const Poly& p) const {
  check_same_field(field_.get(), p.ctx());
  return ChainElem(this, p % modulus());
}

ChainElem ChainCtx::zero() const { return ChainElem(this, Poly(*field_)); }
ChainElem ChainCtx::one() const { return ChainElem(this, Poly::constant(field_->one())); }

ChainElem ChainCtx::uniformizer(unsigned k) const {
  if (k >= e_) return zero();
  return ChainElem(this, f_pows_[k]);
}

const ChainCtx& ChainElem::ring() const {
  if (!ctx_) throw Error(ErrorCode::kContextMismatch, "element has no ring");
  return *ctx_;
}

namespace {

void check_same_ring(const ChainCtx* a, const ChainCtx* b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw Error(ErrorCode::kContextMismatch, "operands from different chain rings");
}

}  // namespace

bool ChainElem::is_unit() const { return !(v_ % ring().f()).is_zero(); }

ChainElem ChainElem::operator-() const { return ChainElem(ctx_, -v_); }

ChainElem& ChainElem::operator+=(const ChainElem& o) {
  check_same_ring(ctx_, o.ctx_);
  v_ += o.v_;
  return *this;
}

ChainElem& ChainElem::operator-=(const ChainElem& o) {
  check_same_ring(ctx_, o.ctx_);
  v_ -= o.v_;
  return *this;
}

ChainElem& ChainElem::operator*=(const ChainElem& o) {
  check_same_ring(ctx_, o.ctx_);
  v_ = (v_ * o.v_) % ctx_->modulus();
  return *this;
}

bool operator==(const ChainElem& a, const ChainElem& b) {
  check_same_ring(a.ctx_, b.ctx_);
  return a.v_ == b.v_;
}

std::vector<Poly> f_adic_expand(const ChainElem& a) {
  const ChainCtx& k = a.ring();
  std::vector<Poly> digits;
  digits.reserve(k.e());
  Poly rest = a.value();
  for (unsigned i = 0; i < k.e(); ++i) {
    auto [q, r] = divmod(rest, k.f());
    digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return digits;
}

ChainElem recompose(const ChainCtx& ctx, const std::vector<Poly>& digits) {
  if (digits.size() > ctx.e()) throw Error(ErrorCode::kLengthMismatch, "too many digits");
  Poly acc(ctx.field());
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i].degree() >= static_cast<int>(ctx.d())) throw Error(ErrorCode::kRangeError, "digit degree too large");
    acc = acc * ctx.f() + digits[i];
  }
  return ChainElem(&ctx, std::move(acc));
}

unsigned valuation(const ChainElem& a) {
  const ChainCtx& k = a.ring();
  if (a.is_zero()) return k.e();
  Poly rest = a.value();
  unsigned v = 0;
  while (true) {
    auto [q, r] = divmod(rest, k.f());
    if (!r.is_zero()) return v;
    rest = std::move(q);
    ++v;
  }
}

ChainElem truncate(const ChainElem& a, unsigned k) {
  const ChainCtx& ctx = a.ring();
  if (k >= ctx.e()) return a;
  return ChainElem(&ctx, a.value() % ctx.f_pow(k));
}

int ceil_half(int x) {
  return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

ResidueSet::ResidueSet(const ChainCtx& ctx, unsigned lo, unsigned hi) : ctx_(&ctx), lo_(lo), hi_(hi) {
  if (lo > hi || hi > ctx.e()) throw Error(ErrorCode::kRangeError, "residue set bounds out of range");
}

BigInt ResidueSet::size() const {
  return big_pow(ctx_->field().q(), static_cast<std::uint64_t>(ctx_->d()) * (hi_ - lo_));
}

Poly ResidueSet::digit_poly(const std::uint32_t* idx) const {
  const FieldCtx& f = ctx_->field();
  std::vector<std::uint32_t> c(ctx_->d());
  for (unsigned i = 0; i < ctx_->d(); ++i) c[i] = f.from_canonical_index(idx[i]).packed();
  return Poly(f, std::move(c));
}

ChainElem ResidueSet::at(const BigInt& index) const {
  if (index < 0 || index >= size()) throw Error(ErrorCode::kRangeError, "residue set index out of range");
  const FieldCtx& f = ctx_->field();
  unsigned d = ctx_->d();
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(d) * (hi_ - lo_));
  BigInt rest = index;
  for (auto& g : digits) {
    g = static_cast<std::uint32_t>(rest % f.q());
    rest /= f.q();
  }
  Poly acc(f);
  for (unsigned k = hi_; k-- > lo_;) acc = acc * ctx_->f() + digit_poly(&digits[(k - lo_) * d]);
  acc = acc * ctx_->f_pow(lo_);
  return ChainElem(ctx_, acc % ctx_->modulus());
}

bool ResidueSet::contains(const ChainElem& a) const {
  auto digits = f_adic_expand(a);
  for (unsigned k = 0; k < digits.size(); ++k)
    if ((k < lo_ || k >= hi_) && !digits[k].is_zero()) return false;
  return true;
}

ResidueSet::Cursor::Cursor(const ResidueSet& set)
    : set_(set), digits_(static_cast<std::size_t>(set.ctx_->d()) * (set.hi_ - set.lo_), 0) {
  rebuild();
}

void ResidueSet::Cursor::rebuild() {
  const ChainCtx& ctx = *set_.ctx_;
  unsigned d = ctx.d();
  Poly acc(ctx.field());
  for (unsigned k = set_.hi_; k-- > set_.lo_;) acc = acc * ctx.f() + set_.digit_poly(&digits_[(k - set_.lo_) * d]);
  acc = acc * ctx.f_pow(set_.lo_);
  value_ = ChainElem(&ctx, acc % ctx.modulus());
}

bool ResidueSet::Cursor::advance() {
  std::uint32_t q = set_.ctx_->field().q();
  for (auto& g : digits_) {
    if (++g < q) {
      rebuild();
      return true;
    }
    g = 0;
  }
  rebuild();
  return false;
}

void ResidueSet::Cursor::reset() {
  std::fill(digits_.begin(), digits_.end(), 0);
  rebuild();
}

}  // namespace ccring
