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

#include "ccring/ideals.hpp"

#include <sstream>

namespace ccring {

const char* kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::kI: return "I";
    case IdealKind::kII: return "II";
    case IdealKind::kIII: return "III";
    case IdealKind::kIV: return "IV";
    case IdealKind::kV: return "V";
  }
  return "?";
}

IdealKind parse_kind(const std::string& name) {
  if (name == "I") return IdealKind::kI;
  if (name == "II") return IdealKind::kII;
  if (name == "III") return IdealKind::kIII;
  if (name == "IV") return IdealKind::kIV;
  if (name == "V") return IdealKind::kV;
  throw Error(ErrorCode::kInvalidSpec, "unknown case tag " + name);
}

IdealSpec IdealSpec::case_i(const ChainElem& b) { return {IdealKind::kI, 0, 0, b}; }
IdealSpec IdealSpec::case_ii(unsigned k, const ChainElem& b) { return {IdealKind::kII, k, 0, b}; }
IdealSpec IdealSpec::case_iii(const ChainCtx& ctx, unsigned k) { return {IdealKind::kIII, k, 0, ctx.zero()}; }
IdealSpec IdealSpec::case_iv(unsigned t, const ChainElem& b) { return {IdealKind::kIV, 0, t, b}; }
IdealSpec IdealSpec::case_v(unsigned k, unsigned t, const ChainElem& b) { return {IdealKind::kV, k, t, b}; }

std::string IdealSpec::to_string() const {
  std::ostringstream os;
  os << kind_name(kind);
  switch (kind) {
    case IdealKind::kI: os << "(b=" << b.value().to_string() << ")"; break;
    case IdealKind::kII: os << "(k=" << k << ", b=" << b.value().to_string() << ")"; break;
    case IdealKind::kIII: os << "(k=" << k << ")"; break;
    case IdealKind::kIV: os << "(t=" << t << ", b=" << b.value().to_string() << ")"; break;
    case IdealKind::kV: os << "(k=" << k << ", t=" << t << ", b=" << b.value().to_string() << ")"; break;
  }
  return os.str();
}

bool operator==(const IdealSpec& x, const IdealSpec& y) {
  return x.kind == y.kind && x.k == y.k && x.t == y.t && x.b == y.b;
}

ResidueRange residue_range(IdealKind kind, unsigned k, unsigned t, unsigned e) {
  const int ie = static_cast<int>(e);
  switch (kind) {
    case IdealKind::kI:
      return {static_cast<unsigned>(ceil_half(ie) - 1), e - 1};
    case IdealKind::kII:
      return {static_cast<unsigned>(ceil_half(ie - static_cast<int>(k)) - 1), e - k - 1};
    case IdealKind::kIV:
    case IdealKind::kV:
      return {static_cast<unsigned>(ceil_half(static_cast<int>(t)) - 1), t - 1};
    case IdealKind::kIII:
      return {0, 0};
  }
  return {0, 0};
}

void validate(const IdealSpec& spec) {
  const ChainCtx& ctx = spec.ring();
  const unsigned e = ctx.e();
  switch (spec.kind) {
    case IdealKind::kI:
      break;
    case IdealKind::kII:
      if (spec.k < 1 || spec.k > e - 1) throw Error(ErrorCode::kInvalidSpec, "case II needs 1 <= k <= e-1");
      break;
    case IdealKind::kIII:
      if (spec.k > e) throw Error(ErrorCode::kInvalidSpec, "case III needs 0 <= k <= e");
      if (!spec.b.is_zero()) throw Error(ErrorCode::kInvalidSpec, "case III carries no b");
      return;
    case IdealKind::kIV:
      if (spec.t < 1 || spec.t > e - 1) throw Error(ErrorCode::kInvalidSpec, "case IV needs 1 <= t <= e-1");
      break;
    case IdealKind::kV:
      if (e < 3 || spec.k < 1 || spec.k > e - 2) throw Error(ErrorCode::kInvalidSpec, "case V needs 1 <= k <= e-2");
      if (spec.t < 1 || spec.t > e - spec.k - 1) throw Error(ErrorCode::kInvalidSpec, "case V needs 1 <= t <= e-k-1");
      break;
  }
  auto range = residue_range(spec.kind, spec.k, spec.t, e);
  if (!ResidueSet(ctx, range.lo, range.hi).contains(spec.b))
    throw Error(ErrorCode::kInvalidSpec, "b lies outside its residue set");
}

BigInt ideal_size(const IdealSpec& spec) {
  validate(spec);
  const ChainCtx& ctx = spec.ring();
  const std::uint64_t e = ctx.e();
  std::uint64_t units = 0;
  switch (spec.kind) {
    case IdealKind::kI: units = e; break;
    case IdealKind::kII: units = e - spec.k; break;
    case IdealKind::kIII: units = 2 * (e - spec.k); break;
    case IdealKind::kIV: units = 2 * e - spec.t; break;
    case IdealKind::kV: units = 2 * e - 2 * spec.k - spec.t; break;
  }
  return big_pow(ctx.field().q(), units * ctx.d());
}

bool ideal_member(const ChainPair& xi, const IdealSpec& spec) {
  validate(spec);
  const ChainCtx& ctx = spec.ring();
  const ChainElem fb = ctx.uniformizer(1) * spec.b;
  switch (spec.kind) {
    case IdealKind::kI:
      return xi.a == fb * xi.b;
    case IdealKind::kII:
      return valuation(xi.b) >= spec.k && xi.a == fb * xi.b;
    case IdealKind::kIII:
      return valuation(xi.a) >= spec.k && valuation(xi.b) >= spec.k;
    case IdealKind::kIV:
      return valuation(xi.a - fb * xi.b) >= spec.t;
    case IdealKind::kV:
      return valuation(xi.b) >= spec.k && valuation(xi.a - fb * xi.b) >= spec.k + spec.t;
  }
  return false;
}

std::vector<ChainPair> generator_rows(const IdealSpec& spec) {
  validate(spec);
  const ChainCtx& ctx = spec.ring();
  const ChainElem fb = ctx.uniformizer(1) * spec.b;
  switch (spec.kind) {
    case IdealKind::kI:
      return {{fb, ctx.one()}};
    case IdealKind::kII:
      return {{ctx.uniformizer(spec.k) * fb, ctx.uniformizer(spec.k)}};
    case IdealKind::kIII:
      return {{ctx.uniformizer(spec.k), ctx.zero()}, {ctx.zero(), ctx.uniformizer(spec.k)}};
    case IdealKind::kIV:
      return {{fb, ctx.one()}, {ctx.uniformizer(spec.t), ctx.zero()}};
    case IdealKind::kV:
      return {{ctx.uniformizer(spec.k) * fb, ctx.uniformizer(spec.k)},
              {ctx.uniformizer(spec.k + spec.t), ctx.zero()}};
  }
  return {};
}

BigInt count_ideals(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s) {
  const std::uint64_t md = static_cast<std::uint64_t>(m) * d;
  BigInt total = 0;
  if (p == 2) {
    const std::uint64_t half = std::uint64_t{1} << (s - 1);
    for (std::uint64_t i = 0; i <= half; ++i) total += BigInt(1 + 4 * i) * big_pow(2, (half - i) * md);
  } else {
    std::uint64_t ps = 1;
    for (unsigned i = 0; i < s; ++i) ps *= p;
    const std::uint64_t half = (ps - 1) / 2;
    for (std::uint64_t i = 0; i <= half; ++i) total += BigInt(3 + 4 * i) * big_pow(p, (half - i) * md);
  }
  return total;
}

BigInt count_ideals(const ChainCtx& ctx) {
  unsigned s = 0;
  for (unsigned e = ctx.e(); e > 1; e /= ctx.field().p()) ++s;
  return count_ideals(ctx.field().p(), ctx.field().m(), ctx.d(), s);
}

BigInt count_ideals_sumform(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s) {
  const std::uint64_t md = static_cast<std::uint64_t>(m) * d;
  std::int64_t e = 1;
  for (unsigned i = 0; i < s; ++i) e *= p;
  BigInt total = 1 + BigInt(e);
  for (std::int64_t k = 0; k <= e - 1; ++k)
    total += big_pow(p, static_cast<std::uint64_t>(e - k - ceil_half(static_cast<int>(e - k))) * md);
  for (std::int64_t k = 0; k <= e - 2; ++k)
    for (std::int64_t t = 1; t <= e - k - 1; ++t)
      total += big_pow(p, static_cast<std::uint64_t>(t - ceil_half(static_cast<int>(t))) * md);
  return total;
}

std::array<BigInt, 5> count_ideals_by_kind(const ChainCtx& ctx) {
  const unsigned e = ctx.e();
  auto block = [&](IdealKind kind, unsigned k, unsigned t) {
    auto r = residue_range(kind, k, t, e);
    return ResidueSet(ctx, r.lo, r.hi).size();
  };
  std::array<BigInt, 5> out{};
  out[0] = block(IdealKind::kI, 0, 0);
  for (unsigned k = 1; k < e; ++k) out[1] += block(IdealKind::kII, k, 0);
  out[2] = e + 1;
  for (unsigned t = 1; t < e; ++t) out[3] += block(IdealKind::kIV, 0, t);
  for (unsigned k = 1; k + 1 < e; ++k)
    for (unsigned t = 1; t + k < e; ++t) out[4] += block(IdealKind::kV, k, t);
  return out;
}

BigInt count_ideals_sumform(const ChainCtx& ctx) {
  unsigned s = 0;
  for (unsigned e = ctx.e(); e > 1; e /= ctx.field().p()) ++s;
  return count_ideals_sumform(ctx.field().p(), ctx.field().m(), ctx.d(), s);
}

IdealStream::IdealStream(ChainCtx::Ptr ctx) : ctx_(std::move(ctx)) {
  const unsigned e = ctx_->e();
  blocks_.push_back({IdealKind::kI, 0, 0});
  for (unsigned k = 1; k + 1 <= e; ++k) blocks_.push_back({IdealKind::kII, k, 0});
  for (unsigned k = 0; k <= e; ++k) blocks_.push_back({IdealKind::kIII, k, 0});
  for (unsigned t = 1; t + 1 <= e; ++t) blocks_.push_back({IdealKind::kIV, 0, t});
  for (unsigned k = 1; k + 2 <= e; ++k)
    for (unsigned t = 1; t + k + 1 <= e; ++t) blocks_.push_back({IdealKind::kV, k, t});
}

std::optional<IdealSpec> IdealStream::next() {
  auto open = [this]() {
    const Block& blk = blocks_[block_];
    auto range = residue_range(blk.kind, blk.k, blk.t, ctx_->e());
    cursor_.emplace(ResidueSet(*ctx_, range.lo, range.hi));
  };
  if (!started_) {
    started_ = true;
    block_ = 0;
    open();
  } else if (block_ >= blocks_.size()) {
    return std::nullopt;
  } else if (!cursor_->advance()) {
    if (++block_ >= blocks_.size()) return std::nullopt;
    open();
  }
  const Block& blk = blocks_[block_];
  return IdealSpec{blk.kind, blk.k, blk.t, cursor_->value()};
}

void IdealStream::reset() {
  started_ = false;
  block_ = 0;
  cursor_.reset();
}

void validate(const CodeSpec& code) {
  if (!code.fd) throw Error(ErrorCode::kInvalidSpec, "code has no factor data");
  if (code.components.size() != code.fd->size()) throw Error(ErrorCode::kLengthMismatch, "need one component per factor");
  for (std::size_t j = 0; j < code.components.size(); ++j) {
    const auto& c = code.components[j];
    if (!c.b.ctx() || !c.ring().same_as(*code.fd->factor(j).chain))
      throw Error(ErrorCode::kContextMismatch, "component over the wrong chain ring");
    validate(c);
  }
}

BigInt code_size(const CodeSpec& code) {
  validate(code);
  BigInt total = 1;
  for (const auto& c : code.components) total *= ideal_size(c);
  return total;
}

BigInt count_codes(const FactorData& fd) {
  BigInt total = 1;
  for (const auto& f : fd.factors()) total *= count_ideals(*f.chain);
  return total;
}

CodeStream::CodeStream(FactorData::Ptr fd, std::optional<BigInt> limit) : fd_(std::move(fd)), limit_(std::move(limit)) {
  for (const auto& f : fd_->factors()) streams_.emplace_back(f.chain);
}

std::optional<CodeSpec> CodeStream::next() {
  if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;
  if (!started_) {
    started_ = true;
    for (auto& s : streams_) current_.push_back(*s.next());
  } else {
    std::size_t j = streams_.size();
    while (true) {
      if (j == 0) {
        done_ = true;
        return std::nullopt;
      }
      --j;
      if (auto s = streams_[j].next()) {
        current_[j] = std::move(*s);
        break;
      }
      streams_[j].reset();
      current_[j] = *streams_[j].next();
    }
  }
  ++emitted_;
  return CodeSpec{fd_, current_};
}

PackedWord pack(const AmbientElem& a, std::uint64_t length) {
  PackedWord w(2 * length, 0);
  for (std::size_t i = 0; i < a.a.size() && i < length; ++i) w[2 * i] = a.a.raw()[i];
  for (std::size_t i = 0; i < a.b.size() && i < length; ++i) w[2 * i + 1] = a.b.raw()[i];
  return w;
}

AmbientElem unpack(const FieldCtx& f, std::span<const std::uint32_t> word) {
  std::vector<std::uint32_t> a(word.size() / 2), b(word.size() / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = word[2 * i];
    b[i] = word[2 * i + 1];
  }
  return {Poly(f, std::move(a)), Poly(f, std::move(b))};
}

void for_each_codeword(const CodeSpec& code, const std::function<void(std::span<const std::uint32_t>)>& fn,
                       std::uint64_t bound) {
  const BigInt size = code_size(code);
  if (size > bound) throw Error(ErrorCode::kTooLarge, "code has " + size.str() + " codewords");
  const FactorData& fd = *code.fd;
  const FieldCtx& f = *fd.params().field;
  const std::uint64_t len = fd.params().length();

  // One level per generator row, holding every multiple of the row.
  std::vector<std::vector<PackedWord>> levels;
  for (std::size_t j = 0; j < code.components.size(); ++j) {
    const ChainCtx& ctx = *fd.factor(j).chain;
    for (const auto& row : generator_rows(code.components[j])) {
      unsigned v = std::min(valuation(row.a), valuation(row.b));
      if (v >= ctx.e()) continue;
      std::vector<PackedWord> words;
      auto cur = ResidueSet(ctx, 0, ctx.e() - v).cursor();
      do {
        const ChainElem& c = cur.value();
        std::vector<ChainPair> parts(fd.size(), ChainPair{});
        for (std::size_t l = 0; l < fd.size(); ++l) parts[l] = {fd.factor(l).chain->zero(), fd.factor(l).chain->zero()};
        parts[j] = {c * row.a, c * row.b};
        words.push_back(pack(fd.assemble(parts), len));
      } while (cur.advance());
      levels.push_back(std::move(words));
    }
  }

  const std::size_t width = 2 * len;
  if (levels.empty()) {
    PackedWord zero(width, 0);
    fn(zero);
    return;
  }
  const std::size_t depth = levels.size();
  std::vector<std::size_t> idx(depth, 0);
  std::vector<PackedWord> partial(depth + 1, PackedWord(width, 0));
  auto rebuild_from = [&](std::size_t l) {
    for (std::size_t i = l; i < depth; ++i) {
      const auto& add = levels[i][idx[i]];
      for (std::size_t w = 0; w < width; ++w) partial[i + 1][w] = f.add(partial[i][w], add[w]);
    }
  };
  rebuild_from(0);
  while (true) {
    fn(partial[depth]);
    std::size_t l = depth;
    while (l > 0) {
      --l;
      if (++idx[l] < levels[l].size()) break;
      idx[l] = 0;
      if (l == 0) return;
    }
    rebuild_from(l);
  }
}

std::vector<AmbientElem> code_codewords(const CodeSpec& code, std::uint64_t bound) {
  std::vector<AmbientElem> out;
  const FieldCtx& f = *code.params().field;
  for_each_codeword(code, [&](std::span<const std::uint32_t> w) { out.push_back(unpack(f, w)); }, bound);
  return out;
}

}  // namespace ccring
