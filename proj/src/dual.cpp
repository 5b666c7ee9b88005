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

#include "ccring/dual.hpp"

namespace ccring {

namespace {

Poly inverse_x(const ChainCtx& target, const AmbientParams& source) {
  const FieldCtx& f = target.field();
  Poly xn = powmod(Poly::x(f), BigInt(source.length() - 1), target.modulus());
  return (xn * source.lambda) % target.modulus();
}

void require_self_paired(const FactorData& fd) {
  const FieldElem& lam = fd.params().lambda;
  if (!(lam * lam).is_one() || !fd.has_pairing())
    throw Error(ErrorCode::kNotSelfPairedLambda, "lambda must satisfy lambda^2 = 1");
}

FieldElem nu_element(const FactorData& fd, int nu) {
  if (nu != 1 && nu != -1) throw Error(ErrorCode::kNotSelfPairedLambda, "nu must be 1 or -1");
  require_self_paired(fd);
  FieldElem v = fd.params().field->from_int(nu);
  if (v != fd.params().lambda) throw Error(ErrorCode::kNotSelfPairedLambda, "lambda does not equal nu");
  return v;
}

}  // namespace

ChainElem inv_x_image(const ChainElem& a, const ChainCtx& target, const AmbientParams& source) {
  check_same_field(&a.ring().field(), &target.field());
  return ChainElem(&target, compose_mod(a.value(), inverse_x(target, source), target.modulus()));
}

IdealSpec dual_component(const IdealSpec& spec, const ChainCtx& target, const AmbientParams& source,
                         const FieldElem& c) {
  validate(spec);
  const unsigned e = spec.ring().e();
  if (target.e() != e || target.d() != spec.ring().d())
    throw Error(ErrorCode::kContextMismatch, "target ring does not match source ring");
  if (spec.kind == IdealKind::kIII) return IdealSpec::case_iii(target, e - spec.k);

  const Poly y = inverse_x(target, source);
  const Poly yd = powmod(y, BigInt(spec.ring().d()), target.modulus());
  const Poly tb = compose_mod(spec.b.value(), y, target.modulus());
  ChainElem bh(&target, ((tb * yd) * (-c)) % target.modulus());

  IdealSpec out;
  switch (spec.kind) {
    case IdealKind::kI: out = {IdealKind::kI, 0, 0, bh}; break;
    case IdealKind::kII: out = {IdealKind::kIV, 0, e - spec.k, bh}; break;
    case IdealKind::kIV: out = {IdealKind::kII, e - spec.t, 0, bh}; break;
    case IdealKind::kV: out = {IdealKind::kV, e - spec.k - spec.t, spec.t, bh}; break;
    case IdealKind::kIII: break;
  }
  auto range = residue_range(out.kind, out.k, out.t, e);
  out.b = truncate(out.b, range.hi);
  validate(out);
  return out;
}

AmbientParams dual_params(const AmbientParams& params) {
  return AmbientParams::make(params.field, params.s, params.n, inverse(params.lambda));
}

DualCodeSpec dual_code(const CodeSpec& code) {
  validate(code);
  const FactorData& fd = *code.fd;
  DualCodeSpec out;
  out.params = dual_params(fd.params());
  const unsigned e = fd.params().nilpotency();
  for (std::size_t j = 0; j < fd.size(); ++j) {
    const Poly& f = fd.factor(j).f;
    auto ring = ChainCtx::make(fd.params().field, reciprocal(f).monic(), e);
    out.components.push_back(dual_component(code.components[j], *ring, fd.params(), f.coeff(0)));
    out.rings.push_back(std::move(ring));
  }
  return out;
}

BigInt dual_code_size(const DualCodeSpec& dual) {
  BigInt total = 1;
  for (const auto& c : dual.components) total *= ideal_size(c);
  return total;
}

CodeSpec as_code_spec(const DualCodeSpec& dual, FactorData::Ptr dual_fd) {
  if (dual_fd->size() != dual.rings.size()) throw Error(ErrorCode::kLengthMismatch, "factor count mismatch");
  CodeSpec out{dual_fd, std::vector<IdealSpec>(dual_fd->size())};
  std::vector<bool> seen(dual_fd->size(), false);
  for (std::size_t j = 0; j < dual.rings.size(); ++j) {
    std::size_t l = 0;
    while (l < dual_fd->size() && dual_fd->factor(l).f != dual.rings[j]->f()) ++l;
    if (l == dual_fd->size() || seen[l]) throw Error(ErrorCode::kInvalidSpec, "dual factor not found");
    seen[l] = true;
    const IdealSpec& src = dual.components[j];
    const ChainCtx& ring = *dual_fd->factor(l).chain;
    out.components[l] = {src.kind, src.k, src.t, ChainElem(&ring, src.b.value())};
  }
  validate(out);
  return out;
}

std::vector<Poly> dual_idempotents(const FactorData& fd) {
  AmbientParams dp = dual_params(fd.params());
  const Poly mod = dp.modulus();
  const FieldCtx& f = *fd.params().field;
  Poly y = (powmod(Poly::x(f), BigInt(dp.length() - 1), mod) * fd.params().lambda) % mod;
  std::vector<Poly> out;
  for (const auto& info : fd.factors()) out.push_back(compose_mod(info.idempotent, y, mod));
  return out;
}

CodeSpec dual_code_nu(const CodeSpec& code) {
  validate(code);
  const FactorData& fd = *code.fd;
  require_self_paired(fd);
  CodeSpec out{code.fd, std::vector<IdealSpec>(fd.size())};
  for (std::size_t j = 0; j < fd.size(); ++j) {
    const std::size_t tj = fd.tau()[j];
    out.components[tj] =
        dual_component(code.components[j], *fd.factor(tj).chain, fd.params(), fd.factor(j).f.coeff(0));
  }
  return out;
}

bool is_self_dual(const CodeSpec& code) { return dual_code_nu(code) == code; }

ChainElem self_dual_residual(const FactorData& fd, std::size_t j, const ChainElem& b) {
  require_self_paired(fd);
  if (fd.tau()[j] != j) throw Error(ErrorCode::kInvalidSpec, "factor is not reciprocal-fixed");
  const FactorInfo& info = fd.factor(j);
  const ChainCtx& ring = *info.chain;
  const FieldElem& nu = fd.params().lambda;
  Poly shift = powmod(Poly::x(ring.field()), BigInt(fd.params().length() - info.degree), ring.modulus());
  ChainElem tb = inv_x_image(b, ring, fd.params());
  ChainElem term(&ring, (shift * (nu * fd.delta()[j])) % ring.modulus());
  return b + term * tb;
}

std::vector<IdealSpec> fixed_self_dual_components(const FactorData& fd, std::size_t j) {
  require_self_paired(fd);
  const ChainCtx& ring = *fd.factor(j).chain;
  const unsigned e = ring.e();
  std::vector<IdealSpec> out;
  {
    auto range = residue_range(IdealKind::kI, 0, 0, e);
    auto cur = ResidueSet(ring, range.lo, range.hi).cursor();
    do {
      if (valuation(self_dual_residual(fd, j, cur.value())) >= e - 1) out.push_back(IdealSpec::case_i(cur.value()));
    } while (cur.advance());
  }
  if (e % 2 == 0) out.push_back(IdealSpec::case_iii(ring, e / 2));
  for (unsigned k = 1; 2 * k < e && k + 2 <= e; ++k) {
    const unsigned t = e - 2 * k;
    auto range = residue_range(IdealKind::kV, k, t, e);
    auto cur = ResidueSet(ring, range.lo, range.hi).cursor();
    do {
      if (valuation(self_dual_residual(fd, j, cur.value())) >= t - 1)
        out.push_back(IdealSpec::case_v(k, t, cur.value()));
    } while (cur.advance());
  }
  return out;
}

BigInt count_self_dual(const FactorData& fd, int nu) {
  nu_element(fd, nu);
  BigInt total = 1;
  for (std::size_t j = 0; j < fd.fixed_count(); ++j) total *= fixed_self_dual_components(fd, j).size();
  for (std::size_t i = 0; i < fd.paired_count(); ++i) total *= count_ideals(*fd.factor(fd.fixed_count() + i).chain);
  return total;
}

SelfDualStream::SelfDualStream(FactorData::Ptr fd, int nu, std::optional<BigInt> limit)
    : fd_(std::move(fd)), limit_(std::move(limit)) {
  nu_element(*fd_, nu);
  for (std::size_t j = 0; j < fd_->fixed_count(); ++j) {
    fixed_.push_back(fixed_self_dual_components(*fd_, j));
    fixed_pos_.push_back(0);
  }
  for (std::size_t i = 0; i < fd_->paired_count(); ++i) paired_.emplace_back(fd_->factor(fd_->fixed_count() + i).chain);
  current_.resize(fd_->size());
}

void SelfDualStream::fill_group(std::size_t g) {
  if (g < fixed_.size()) {
    current_[g] = fixed_[g][fixed_pos_[g]];
    return;
  }
  const std::size_t j = g;
  const std::size_t tj = fd_->tau()[j];
  current_[tj] = dual_component(current_[j], *fd_->factor(tj).chain, fd_->params(), fd_->factor(j).f.coeff(0));
}

bool SelfDualStream::advance_group(std::size_t g) {
  if (g < fixed_.size()) {
    if (++fixed_pos_[g] < fixed_[g].size()) return true;
    fixed_pos_[g] = 0;
    return false;
  }
  auto& s = paired_[g - fixed_.size()];
  if (auto v = s.next()) {
    current_[g] = std::move(*v);
    return true;
  }
  s.reset();
  current_[g] = *s.next();
  return false;
}

std::optional<CodeSpec> SelfDualStream::next() {
  if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;
  const std::size_t groups = fixed_.size() + paired_.size();
  if (!started_) {
    started_ = true;
    for (const auto& f : fixed_)
      if (f.empty()) {
        done_ = true;
        return std::nullopt;
      }
    for (std::size_t i = 0; i < paired_.size(); ++i) current_[fixed_.size() + i] = *paired_[i].next();
    for (std::size_t g = 0; g < groups; ++g) fill_group(g);
  } else {
    std::size_t g = groups;
    while (true) {
      if (g == 0) {
        done_ = true;
        return std::nullopt;
      }
      --g;
      bool moved = advance_group(g);
      fill_group(g);
      if (moved) break;
    }
  }
  ++emitted_;
  return CodeSpec{fd_, current_};
}

}  // namespace ccring
