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

#include "ccring/decomp.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace ccring {

namespace {

constexpr std::uint64_t kMaxLength = 1u << 20;

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CCRING_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    return std::stoull(env, nullptr, 0);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string("bad CCRING_SEED value: ") + env);
  }
}

AmbientParams AmbientParams::make(FieldCtx::Ptr field, unsigned s, std::uint64_t n, const FieldElem& lambda) {
  if (!field) throw Error(ErrorCode::kContextMismatch, "missing field");
  if (s == 0) throw Error(ErrorCode::kSZero, "s must be at least 1");
  if (n == 0) throw Error(ErrorCode::kRangeError, "n must be positive");
  if (std::gcd(n, static_cast<std::uint64_t>(field->p())) != 1)
    throw Error(ErrorCode::kGcdViolation, "n must be coprime to p");
  check_same_field(field.get(), lambda.ctx());
  if (lambda.is_zero()) throw Error(ErrorCode::kZeroLambda, "lambda must be nonzero");
  std::uint64_t len = n;
  for (unsigned i = 0; i < s; ++i) {
    len *= field->p();
    if (len > kMaxLength) throw Error(ErrorCode::kTooLarge, "code length n*p^s is too large");
  }
  AmbientParams out;
  out.field = std::move(field);
  out.s = s;
  out.n = n;
  out.lambda = FieldElem(out.field.get(), lambda.packed());
  return out;
}

std::uint64_t AmbientParams::length() const {
  std::uint64_t len = n;
  for (unsigned i = 0; i < s; ++i) len *= field->p();
  return len;
}

unsigned AmbientParams::nilpotency() const {
  unsigned e = 1;
  for (unsigned i = 0; i < s; ++i) e *= field->p();
  return e;
}

Poly AmbientParams::modulus() const {
  return Poly::monomial(field->one(), length()) - Poly::constant(lambda);
}

FactorData::Ptr FactorData::build(const AmbientParams& params, std::uint64_t seed) {
  auto fd = std::make_shared<FactorData>();
  fd->params_ = params;
  const FieldCtx& f = *params.field;
  const unsigned e = params.nilpotency();
  fd->lambda0_ = ps_root(params.lambda, params.s);
  Poly g = Poly::monomial(f.one(), params.n) - Poly::constant(fd->lambda0_);
  auto fac = factor_squarefree(g, seed);
  std::vector<Poly> irr;
  for (auto& [p, mult] : fac.factors) irr.push_back(p);

  const bool self_paired = (params.lambda * params.lambda).is_one();
  if (self_paired) {
    const std::size_t r = irr.size();
    std::vector<std::size_t> partner(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      Poly rec = reciprocal(irr[j]).monic();
      for (std::size_t l = 0; l < r; ++l)
        if (irr[l] == rec) partner[j] = l;
      if (partner[j] == r) throw Error(ErrorCode::kInvalidSpec, "reciprocal factor not found");
    }
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < r; ++j)
      if (partner[j] == j) order.push_back(j);
    std::size_t rho = order.size();
    std::vector<std::size_t> firsts;
    for (std::size_t j = 0; j < r; ++j)
      if (partner[j] > j) firsts.push_back(j);
    for (auto j : firsts) order.push_back(j);
    for (auto j : firsts) order.push_back(partner[j]);
    std::vector<Poly> sorted;
    std::vector<std::size_t> pos(r);
    for (std::size_t i = 0; i < r; ++i) {
      sorted.push_back(irr[order[i]]);
      pos[order[i]] = i;
    }
    fd->tau_.resize(r);
    for (std::size_t i = 0; i < r; ++i) fd->tau_[i] = pos[partner[order[i]]];
    irr = std::move(sorted);
    fd->rho_ = rho;
    fd->paired_ = firsts.size();
    for (const auto& p : irr) fd->delta_.push_back(inverse(p.coeff(0)));
  }

  const Poly big_mod = params.modulus();
  const BigInt pe = e;
  for (const auto& fj : irr) {
    FactorInfo info;
    info.f = fj;
    info.degree = static_cast<unsigned>(fj.degree());
    info.cofactor = g / fj;
    auto bez = xgcd(info.cofactor, fj);
    info.v = bez.u;
    info.w = bez.v;
    info.idempotent = powmod(info.v * info.cofactor, pe, big_mod);
    info.chain = ChainCtx::make(params.field, fj, e);
    fd->factors_.push_back(std::move(info));
  }
  return fd;
}

const FactorInfo& FactorData::factor(std::size_t j) const {
  if (j >= factors_.size()) throw Error(ErrorCode::kIndexOutOfRange, "factor index out of range");
  return factors_[j];
}

Poly FactorData::reduce(const Poly& a) const {
  const FieldCtx& f = *params_.field;
  const std::size_t len = params_.length();
  if (a.size() <= len) return a;
  std::vector<std::uint32_t> c = a.raw();
  const std::uint32_t lam = params_.lambda.packed();
  for (std::size_t i = c.size(); i-- > len;) {
    if (!c[i]) continue;
    c[i - len] = f.add(c[i - len], f.mul(lam, c[i]));
    c[i] = 0;
  }
  c.resize(len);
  return Poly(f, std::move(c));
}

AmbientElem FactorData::reduce(const AmbientElem& a) const { return {reduce(a.a), reduce(a.b)}; }

AmbientElem FactorData::multiply(const AmbientElem& x, const AmbientElem& y) const {
  return {reduce(x.a * y.a), reduce(x.a * y.b + x.b * y.a)};
}

ChainPair FactorData::project(const AmbientElem& a, std::size_t j) const {
  const ChainCtx& k = *factor(j).chain;
  return {k.elem(a.a), k.elem(a.b)};
}

AmbientElem FactorData::assemble(const std::vector<ChainPair>& parts) const {
  if (parts.size() != factors_.size()) throw Error(ErrorCode::kLengthMismatch, "need one part per factor");
  const FieldCtx& f = *params_.field;
  AmbientElem out{Poly(f), Poly(f)};
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const Poly& eps = factors_[j].idempotent;
    out.a += eps * parts[j].a.value();
    out.b += eps * parts[j].b.value();
  }
  return reduce(out);
}

}  // namespace ccring
