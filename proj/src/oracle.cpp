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

#include "ccring/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ccring {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Advances v as a base-p counter; false after wrapping to zero.
bool odometer(FpVec& v, std::uint32_t p) {
  for (auto& c : v) {
    if (++c < p) return true;
    c = 0;
  }
  return false;
}

bool leading_one(const FpVec& v) {
  for (auto c : v)
    if (c) return c == 1;
  return false;
}

FpMatrix build_map(const FpArith* ar, std::size_t dim, const std::function<FpVec(const FpVec&)>& fn) {
  FpMatrix m(ar, dim, dim);
  FpVec unit(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    unit[j] = 1;
    m.set_column(j, fn(unit));
    unit[j] = 0;
  }
  return m;
}

}  // namespace

PairCoords::PairCoords(ChainCtx::Ptr ctx)
    : ctx_(std::move(ctx)),
      ar_(ctx_->field().p()),
      half_(static_cast<std::size_t>(ctx_->field().m()) * ctx_->d() * ctx_->e()),
      mx_(&ar_, 2 * half_, 2 * half_),
      mg_(&ar_, 2 * half_, 2 * half_),
      u_(&ar_, 2 * half_, 2 * half_) {
  const ChainCtx& k = *ctx_;
  const ChainElem x = k.elem(Poly::x(k.field()));
  const ChainElem g = k.elem(Poly::constant(k.field().generator()));
  mx_ = build_map(&ar_, dim(), [&](const FpVec& v) {
    ChainPair c = from_vec(v);
    return to_vec({c.a * x, c.b * x});
  });
  u_ = build_map(&ar_, dim(), [&](const FpVec& v) {
    ChainPair c = from_vec(v);
    return to_vec({k.zero(), c.a});
  });
  ring_maps_.push_back(&mx_);
  if (k.field().m() > 1) {
    mg_ = build_map(&ar_, dim(), [&](const FpVec& v) {
      ChainPair c = from_vec(v);
      return to_vec({c.a * g, c.b * g});
    });
    ring_maps_.push_back(&mg_);
  }
}

std::uint64_t PairCoords::space_size() const { return saturating_pow(ar_.p(), dim()); }

FpVec PairCoords::to_vec(const ChainPair& v) const {
  const FieldCtx& f = ctx_->field();
  const std::uint32_t m = f.m();
  FpVec out(dim(), 0);
  const Poly* parts[2] = {&v.a.value(), &v.b.value()};
  for (int h = 0; h < 2; ++h)
    for (std::size_t i = 0; i < parts[h]->size(); ++i)
      for (std::uint32_t k = 0; k < m; ++k)
        out[h * half_ + i * m + k] = static_cast<std::uint8_t>(f.digit(parts[h]->raw()[i], k));
  return out;
}

ChainPair PairCoords::from_vec(const FpVec& v) const {
  const FieldCtx& f = ctx_->field();
  const std::uint32_t m = f.m();
  const std::size_t len = half_ / m;
  std::vector<std::uint32_t> c[2];
  for (int h = 0; h < 2; ++h) {
    c[h].assign(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::uint32_t> digits(m);
      for (std::uint32_t k = 0; k < m; ++k) digits[k] = v[h * half_ + i * m + k];
      c[h][i] = f.from_coeffs(digits).packed();
    }
  }
  return {ChainElem(ctx_.get(), Poly(f, std::move(c[0]))), ChainElem(ctx_.get(), Poly(f, std::move(c[1])))};
}

FpVec PairCoords::from_index(std::uint64_t index) const {
  FpVec v(dim(), 0);
  for (auto& c : v) {
    c = static_cast<std::uint8_t>(index % ar_.p());
    index /= ar_.p();
  }
  return v;
}

FpSpace PairCoords::span(const std::vector<ChainPair>& gens) const {
  std::vector<FpVec> vs;
  for (const auto& g : gens) vs.push_back(to_vec(g));
  return closure(&ar_, dim(), vs, ring_maps_);
}

std::vector<FpSpace> brute_submodules(const PairCoords& pc, std::uint64_t budget) {
  if (pc.space_size() > budget) throw Error(ErrorCode::kTooLarge, "K^2 exceeds the oracle budget");
  const FpArith* ar = &pc.arith();
  std::vector<FpSpace> cyclic;
  std::unordered_set<std::string> cyclic_keys;
  FpVec v(pc.dim(), 0);
  while (odometer(v, ar->p())) {
    if (!leading_one(v)) continue;
    FpSpace s = closure(ar, pc.dim(), {v}, pc.ring_maps());
    if (cyclic_keys.insert(s.key()).second) cyclic.push_back(std::move(s));
  }
  std::vector<FpSpace> out;
  std::unordered_set<std::string> keys;
  FpSpace zero(ar, pc.dim());
  keys.insert(zero.key());
  out.push_back(zero);
  for (const auto& s : cyclic)
    if (keys.insert(s.key()).second) out.push_back(s);
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      FpSpace s = cyclic[i];
      s.insert_all(cyclic[j]);
      if (s.rank() == cyclic[i].rank() || s.rank() == cyclic[j].rank()) continue;
      if (keys.insert(s.key()).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<FpSpace> brute_condition5(const PairCoords& pc, const std::vector<FpSpace>& submodules) {
  std::vector<FpSpace> out;
  for (const auto& s : submodules) {
    bool ok = true;
    for (const auto& r : s.rows()) {
      if (!s.contains(pc.shift_u().apply(r))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<FpSpace> generator_families(const PairCoords& pc) {
  const ChainCtx& k = pc.ring();
  const unsigned e = k.e();
  auto fp = [&](unsigned i) { return k.uniformizer(i); };
  const ChainElem one = k.one(), zero = k.zero();
  std::vector<FpSpace> out;
  auto each = [&](unsigned lo, unsigned hi, const std::function<std::vector<ChainPair>(const ChainElem&)>& rows) {
    auto cur = ResidueSet(k, lo, hi).cursor();
    do {
      out.push_back(pc.span(rows(cur.value())));
    } while (cur.advance());
  };
  // (i)
  each(0, e, [&](const ChainElem& a) { return std::vector<ChainPair>{{one, a}}; });
  // (ii)
  for (unsigned kk = 1; kk + 1 <= e; ++kk)
    each(0, e - kk, [&](const ChainElem& a) { return std::vector<ChainPair>{{fp(kk), fp(kk) * a}}; });
  // (iii)
  each(0, e - 1, [&](const ChainElem& b) { return std::vector<ChainPair>{{fp(1) * b, one}}; });
  // (iv)
  for (unsigned kk = 1; kk + 1 <= e; ++kk)
    each(0, e - kk - 1, [&](const ChainElem& b) { return std::vector<ChainPair>{{fp(kk + 1) * b, fp(kk)}}; });
  // (v)
  for (unsigned kk = 0; kk <= e; ++kk) out.push_back(pc.span({{fp(kk), zero}, {zero, fp(kk)}}));
  // (vi)
  for (unsigned t = 1; t + 1 <= e; ++t)
    each(0, t, [&](const ChainElem& c) { return std::vector<ChainPair>{{one, c}, {zero, fp(t)}}; });
  // (vii)
  for (unsigned kk = 1; kk + 2 <= e; ++kk)
    for (unsigned t = 1; t + kk + 1 <= e; ++t)
      each(0, t, [&](const ChainElem& c) { return std::vector<ChainPair>{{fp(kk), fp(kk) * c}, {zero, fp(kk + t)}}; });
  // (viii)
  for (unsigned t = 1; t + 1 <= e; ++t)
    each(1, std::max(1u, t), [&](const ChainElem& c) { return std::vector<ChainPair>{{c, one}, {fp(t), zero}}; });
  // (ix)
  for (unsigned kk = 1; kk + 2 <= e; ++kk)
    for (unsigned t = 1; t + kk + 1 <= e; ++t)
      each(1, std::max(1u, t), [&](const ChainElem& c) {
        return std::vector<ChainPair>{{fp(kk) * c, fp(kk)}, {fp(kk + t), zero}};
      });
  return out;
}

BigInt length2_code_count(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s) {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < s; ++i) e *= p;
  BigInt total = 0;
  for (std::uint64_t j = 0; j <= e; ++j) total += BigInt(2 * j + 1) * big_pow(p, m * (e - j) * d);
  return total;
}

AmbientCoords::AmbientCoords(FactorData::Ptr fd)
    : fd_(std::move(fd)),
      ar_(fd_->params().field->p()),
      dim_(2 * static_cast<std::size_t>(fd_->params().field->m()) * fd_->params().length()),
      mx_(&ar_, dim_, dim_),
      mu_(&ar_, dim_, dim_),
      mg_(&ar_, dim_, dim_) {
  const FieldCtx& f = *fd_->params().field;
  const std::uint64_t len = fd_->params().length();
  const AmbientElem x{Poly::x(f), Poly(f)};
  const AmbientElem u{Poly(f), Poly::constant(f.one())};
  const AmbientElem g{Poly::constant(f.generator()), Poly(f)};
  auto mult = [&](const AmbientElem& by) {
    return [&, by](const FpVec& v) {
      AmbientElem a = unpack(f, to_word(v));
      return to_vec(pack(fd_->multiply(a, by), len));
    };
  };
  mx_ = build_map(&ar_, dim_, mult(x));
  mu_ = build_map(&ar_, dim_, mult(u));
  maps_ = {&mx_, &mu_};
  if (f.m() > 1) {
    mg_ = build_map(&ar_, dim_, mult(g));
    maps_.push_back(&mg_);
  }
}

std::uint64_t AmbientCoords::space_size() const { return saturating_pow(ar_.p(), dim_); }

FpVec AmbientCoords::to_vec(std::span<const std::uint32_t> word) const {
  const FieldCtx& f = *fd_->params().field;
  const std::uint32_t m = f.m();
  FpVec v(dim_, 0);
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::uint32_t k = 0; k < m; ++k) v[i * m + k] = static_cast<std::uint8_t>(f.digit(word[i], k));
  return v;
}

PackedWord AmbientCoords::to_word(const FpVec& v) const {
  const FieldCtx& f = *fd_->params().field;
  const std::uint32_t m = f.m();
  PackedWord w(dim_ / m, 0);
  std::vector<std::uint32_t> digits(m);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint32_t k = 0; k < m; ++k) digits[k] = v[i * m + k];
    w[i] = f.from_coeffs(digits).packed();
  }
  return w;
}

FpVec AmbientCoords::from_index(std::uint64_t index) const {
  FpVec v(dim_, 0);
  for (auto& c : v) {
    c = static_cast<std::uint8_t>(index % ar_.p());
    index /= ar_.p();
  }
  return v;
}

FpSpace AmbientCoords::ideal_of(const std::vector<FpVec>& gens) const { return closure(&ar_, dim_, gens, maps_); }

std::vector<FpSpace> brute_ambient_ideals(const AmbientCoords& ac, AmbientIdealReport& report, std::uint64_t budget) {
  if (ac.space_size() > budget) throw Error(ErrorCode::kTooLarge, "ambient space exceeds the oracle budget");
  const FactorData& fd = ac.factors();
  const std::uint64_t len = fd.params().length();
  const FpArith* ar = &ac.arith();

  // Per factor: the condition-(5) submodules pushed into the ambient ring.
  std::vector<std::vector<std::vector<FpVec>>> pieces(fd.size());
  for (std::size_t j = 0; j < fd.size(); ++j) {
    PairCoords pc(fd.factor(j).chain);
    auto c5 = brute_condition5(pc, brute_submodules(pc, budget));
    for (const auto& s : c5) {
      std::vector<FpVec> rows;
      for (const auto& r : s.rows()) {
        std::vector<ChainPair> parts;
        for (std::size_t l = 0; l < fd.size(); ++l)
          parts.push_back({fd.factor(l).chain->zero(), fd.factor(l).chain->zero()});
        parts[j] = pc.from_vec(r);
        rows.push_back(ac.to_vec(pack(fd.assemble(parts), len)));
      }
      pieces[j].push_back(std::move(rows));
    }
  }

  std::vector<FpSpace> out;
  std::unordered_set<std::string> keys;
  std::vector<std::size_t> idx(fd.size(), 0);
  report.assembled = 0;
  while (true) {
    FpSpace s(ar, ac.dim());
    for (std::size_t j = 0; j < fd.size(); ++j)
      for (const auto& r : pieces[j][idx[j]]) s.insert(r);
    ++report.assembled;
    if (keys.insert(s.key()).second) out.push_back(std::move(s));
    std::size_t j = fd.size();
    bool more = false;
    while (j > 0) {
      --j;
      if (++idx[j] < pieces[j].size()) {
        more = true;
        break;
      }
      idx[j] = 0;
    }
    if (!more) break;
  }
  report.distinct = out.size();

  report.all_closed = true;
  for (const auto& s : out)
    for (const auto& r : s.rows())
      for (const auto* m : ac.ring_maps())
        if (!s.contains(m->apply(r))) report.all_closed = false;

  report.principal_checked = 0;
  report.all_principal_found = true;
  FpVec v(ac.dim(), 0);
  while (odometer(v, ar->p())) {
    if (!leading_one(v)) continue;
    ++report.principal_checked;
    if (!keys.count(ac.ideal_of({v}).key())) report.all_principal_found = false;
  }
  return out;
}

std::uint64_t word_index(std::span<const std::uint32_t> word, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = word.size(); i-- > 0;) idx = idx * q + word[i];
  return idx;
}

WordSet codeword_set(const CodeSpec& code) {
  const std::uint32_t q = code.params().field->q();
  WordSet out;
  for_each_codeword(code, [&](std::span<const std::uint32_t> w) { out.push_back(word_index(w, q)); });
  std::sort(out.begin(), out.end());
  return out;
}

WordSet brute_dual(const std::vector<PackedWord>& words, const FieldCtx& field, std::uint64_t length,
                   std::uint64_t budget) {
  const std::uint32_t q = field.q();
  const std::size_t width = 2 * length;
  if (saturating_pow(q, width) > budget) throw Error(ErrorCode::kTooLarge, "ambient space exceeds the oracle budget");

  // An F_p basis of the span of the words.
  FpArith ar(field.p());
  const std::uint32_t m = field.m();
  FpSpace basis(&ar, width * m);
  for (const auto& w : words) {
    FpVec v(width * m, 0);
    for (std::size_t i = 0; i < width; ++i)
      for (std::uint32_t k = 0; k < m; ++k) v[i * m + k] = static_cast<std::uint8_t>(field.digit(w[i], k));
    basis.insert(std::move(v));
    if (basis.rank() == width * m) break;
  }
  std::vector<PackedWord> gens;
  std::vector<std::uint32_t> digits(m);
  for (const auto& r : basis.rows()) {
    PackedWord w(width);
    for (std::size_t i = 0; i < width; ++i) {
      for (std::uint32_t k = 0; k < m; ++k) digits[k] = r[i * m + k];
      w[i] = field.from_coeffs(digits).packed();
    }
    gens.push_back(std::move(w));
  }

  WordSet out;
  PackedWord v(width, 0);
  std::uint64_t index = 0;
  while (true) {
    bool orth = true;
    for (const auto& c : gens) {
      std::uint32_t s0 = 0, s1 = 0;
      for (std::size_t i = 0; i < length; ++i) {
        const std::uint32_t v0 = v[2 * i], v1 = v[2 * i + 1], c0 = c[2 * i], c1 = c[2 * i + 1];
        s0 = field.add(s0, field.mul(v0, c0));
        s1 = field.add(s1, field.add(field.mul(v0, c1), field.mul(v1, c0)));
      }
      if (s0 || s1) {
        orth = false;
        break;
      }
    }
    if (orth) out.push_back(index);
    ++index;
    std::size_t i = 0;
    for (; i < width; ++i) {
      if (++v[i] < q) break;
      v[i] = 0;
    }
    if (i == width) break;
  }
  return out;
}

WordSet brute_dual(const CodeSpec& code, std::uint64_t budget) {
  std::vector<PackedWord> words;
  for_each_codeword(code, [&](std::span<const std::uint32_t> w) { words.emplace_back(w.begin(), w.end()); });
  return brute_dual(words, *code.params().field, code.params().length(), budget);
}

Poly first_irreducible(const FieldCtx& field, unsigned d) {
  const std::uint32_t q = field.q();
  std::vector<std::uint32_t> idx(d, 0);
  while (true) {
    std::vector<std::uint32_t> c(d + 1);
    for (unsigned i = 0; i < d; ++i) c[i] = field.from_canonical_index(idx[i]).packed();
    c[d] = 1;
    Poly f(field, c);
    if (is_irreducible(f)) return f;
    unsigned i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < q) break;
      idx[i] = 0;
      if (i == 0) throw Error(ErrorCode::kReducibleModulus, "no irreducible found");
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string code_key(const CodeSpec& c) {
  std::string k;
  for (const auto& s : c.components) k += s.to_string() + ";";
  return k;
}

FactorData::Ptr instance(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto f = FieldCtx::make(p, m);
  return FactorData::build(AmbientParams::make(f, s, n, f->from_int(lambda)));
}

std::string tag(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  std::ostringstream os;
  os << "(p=" << p << ",m=" << m << ",s=" << s << ",n=" << n << ",lambda=" << lambda << ")";
  return os.str();
}

}  // namespace

CheckResult check_chain_classification(std::uint32_t p, std::uint32_t m, unsigned d, unsigned s) {
  auto t0 = Clock::now();
  CheckResult res;
  std::ostringstream name;
  name << "chain ring classification (p=" << p << ",m=" << m << ",d=" << d << ",s=" << s << ")";
  res.name = name.str();
  std::ostringstream why;
  try {
    auto field = FieldCtx::make(p, m);
    unsigned e = 1;
    for (unsigned i = 0; i < s; ++i) e *= p;
    auto ctx = ChainCtx::make(field, first_irreducible(*field, d), e);
    PairCoords pc(ctx);
    bool ok = true;

    auto subs = brute_submodules(pc);
    BigInt expected = length2_code_count(p, m, d, s);
    if (BigInt(subs.size()) != expected) {
      ok = false;
      why << "submodules " << subs.size() << " != " << expected << "; ";
    }
    std::unordered_set<std::string> sub_keys;
    for (const auto& x : subs) sub_keys.insert(x.key());

    auto fam = generator_families(pc);
    std::unordered_set<std::string> fam_keys;
    for (const auto& x : fam) fam_keys.insert(x.key());
    if (fam_keys.size() != fam.size()) {
      ok = false;
      why << "generator families repeat a module; ";
    }
    if (fam_keys != sub_keys) {
      ok = false;
      why << "generator families differ from submodules; ";
    }

    auto c5 = brute_condition5(pc, subs);
    std::unordered_set<std::string> c5_keys;
    for (const auto& x : c5) c5_keys.insert(x.key());
    if (BigInt(c5.size()) != count_ideals(*ctx)) {
      ok = false;
      why << "condition-5 count " << c5.size() << " != " << count_ideals(*ctx) << "; ";
    }

    const bool exhaustive = pc.space_size() <= kExhaustiveMembershipBudget;
    std::mt19937_64 rng(kDefaultSeed);
    std::unordered_set<std::string> spec_keys;
    std::size_t specs = 0;
    IdealStream stream(ctx);
    while (auto spec = stream.next()) {
      ++specs;
      FpSpace gen = pc.span(generator_rows(*spec));
      BigInt size = ideal_size(*spec);
      if (exhaustive) {
        FpSpace members(&pc.arith(), pc.dim());
        std::uint64_t count = 0;
        FpVec v(pc.dim(), 0);
        do {
          if (ideal_member(pc.from_vec(v), *spec)) {
            ++count;
            members.insert(v);
          }
        } while (odometer(v, p));
        if (BigInt(count) != big_pow(p, members.rank()) || BigInt(count) != size) {
          ok = false;
          why << spec->to_string() << " member count " << count << " vs size " << size << "; ";
        }
        if (!(members == gen)) {
          ok = false;
          why << spec->to_string() << " generators do not span the member set; ";
        }
      } else {
        for (const auto& r : gen.rows())
          if (!ideal_member(pc.from_vec(r), *spec)) {
            ok = false;
            why << spec->to_string() << " generator span leaves the member set; ";
            break;
          }
        for (int i = 0; i < 200; ++i) {
          FpVec v = pc.from_index(rng() % pc.space_size());
          // Bias half the samples into the ideal so both outcomes are exercised.
          if (i % 2 && gen.rank()) {
            FpVec w(pc.dim(), 0);
            for (const auto& r : gen.rows()) {
              std::uint8_t c = static_cast<std::uint8_t>(rng() % p);
              for (std::size_t k = 0; k < w.size(); ++k) w[k] = pc.arith().add(w[k], pc.arith().mul(c, r[k]));
            }
            v = w;
          }
          if (ideal_member(pc.from_vec(v), *spec) != gen.contains(v)) {
            ok = false;
            why << spec->to_string() << " membership disagrees on a sample; ";
            break;
          }
        }
        if (big_pow(p, gen.rank()) != size) {
          ok = false;
          why << spec->to_string() << " size mismatch; ";
        }
      }
      if (!c5_keys.count(gen.key())) {
        ok = false;
        why << spec->to_string() << " is not a condition-5 module; ";
      }
      spec_keys.insert(gen.key());
    }
    if (spec_keys.size() != specs || spec_keys != c5_keys) {
      ok = false;
      why << "enumeration is not a bijection onto condition-5 modules; ";
    }
    res.pass = ok;
    std::ostringstream info;
    info << subs.size() << " submodules, " << c5.size() << " ideals, membership "
         << (exhaustive ? "exhaustive" : "sampled");
    res.detail = ok ? info.str() : why.str();
  } catch (const std::exception& ex) {
    res.pass = false;
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

CheckResult check_ambient_ideals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto t0 = Clock::now();
  CheckResult res;
  res.name = "ambient ideals " + tag(p, m, s, n, lambda);
  try {
    auto fd = instance(p, m, s, n, lambda);
    AmbientCoords ac(fd);
    AmbientIdealReport rep;
    auto ideals = brute_ambient_ideals(ac, rep);
    BigInt expected = count_codes(*fd);
    bool ok = BigInt(rep.distinct) == expected && rep.assembled == rep.distinct && rep.all_closed &&
              rep.all_principal_found;
    // Each constructed code must be one of the assembled ideals.
    std::unordered_set<std::string> keys;
    for (const auto& x : ideals) keys.insert(x.key());
    std::size_t matched = 0;
    CodeStream cs(fd);
    while (auto code = cs.next()) {
      FpSpace sp(&ac.arith(), ac.dim());
      for_each_codeword(*code, [&](std::span<const std::uint32_t> w) {
        if (sp.rank() < ac.dim()) sp.insert(ac.to_vec(w));
      });
      if (keys.count(sp.key()) && big_pow(p, sp.rank()) == code_size(*code)) ++matched;
    }
    ok = ok && BigInt(matched) == expected;
    std::ostringstream os;
    os << rep.distinct << " ideals (expected " << expected << "), closed=" << rep.all_closed
       << ", principal ideals found=" << rep.all_principal_found << ", constructed codes matched=" << matched;
    res.pass = ok;
    res.detail = os.str();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

CheckResult check_duals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto t0 = Clock::now();
  CheckResult res;
  res.name = "dual codes " + tag(p, m, s, n, lambda);
  try {
    auto fd = instance(p, m, s, n, lambda);
    auto dfd = FactorData::build(dual_params(fd->params()));
    const FieldCtx& f = *fd->params().field;
    const BigInt ambient = big_pow(f.q(), 2 * fd->params().length());
    const bool nu_case = fd->has_pairing();
    std::size_t codes = 0, failures = 0;
    std::ostringstream why;
    CodeStream cs(fd);
    while (auto code = cs.next()) {
      ++codes;
      WordSet mine = codeword_set(*code);
      bool ok = BigInt(mine.size()) == code_size(*code) &&
                std::adjacent_find(mine.begin(), mine.end()) == mine.end();
      WordSet truth = brute_dual(*code);
      DualCodeSpec dual = dual_code(*code);
      CodeSpec dual_spec = as_code_spec(dual, dfd);
      ok = ok && codeword_set(dual_spec) == truth;
      ok = ok && code_size(*code) * dual_code_size(dual) == ambient;
      ok = ok && as_code_spec(dual_code(dual_spec), fd) == *code;
      if (nu_case) {
        CodeSpec dn = dual_code_nu(*code);
        ok = ok && dn == dual_spec && dual_code_nu(dn) == *code;
      }
      if (!ok) {
        if (failures < 3) why << code_key(*code) << " ";
        ++failures;
      }
    }
    res.pass = failures == 0 && BigInt(codes) == count_codes(*fd);
    std::ostringstream os;
    os << codes << " codes, " << failures << " failures";
    if (failures) os << ": " << why.str();
    res.detail = os.str();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

CheckResult check_self_duals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, int nu) {
  auto t0 = Clock::now();
  CheckResult res;
  res.name = "self-dual codes " + tag(p, m, s, n, nu);
  try {
    auto fd = instance(p, m, s, n, nu);
    std::set<std::string> fixed;
    CodeStream cs(fd);
    while (auto code = cs.next())
      if (brute_dual(*code) == codeword_set(*code)) fixed.insert(code_key(*code));
    std::set<std::string> emitted;
    bool all_pass = true;
    SelfDualStream sd(fd, nu);
    while (auto code = sd.next()) {
      all_pass = all_pass && is_self_dual(*code);
      emitted.insert(code_key(*code));
    }
    const BigInt counted = count_self_dual(*fd, nu);
    res.pass = all_pass && emitted == fixed && BigInt(emitted.size()) == counted;
    std::ostringstream os;
    os << "brute-force fixed points " << fixed.size() << ", enumerated " << emitted.size() << ", counted " << counted
       << ", every emitted code self-dual=" << all_pass;
    res.detail = os.str();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

CheckResult check_u_self_dual(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto t0 = Clock::now();
  CheckResult res;
  res.name = "<u> is its own dual " + tag(p, m, s, n, lambda);
  try {
    auto fd = instance(p, m, s, n, lambda);
    auto dfd = FactorData::build(dual_params(fd->params()));
    CodeSpec code{fd, {}};
    for (const auto& info : fd->factors()) code.components.push_back(IdealSpec::case_i(info.chain->zero()));
    WordSet mine = codeword_set(code);
    WordSet truth = brute_dual(code);
    CodeSpec dual_spec = as_code_spec(dual_code(code), dfd);
    bool all_u = true;
    for (const auto& c : dual_spec.components) all_u = all_u && c.kind == IdealKind::kI && c.b.is_zero();
    res.pass = mine == truth && codeword_set(dual_spec) == truth && all_u;
    std::ostringstream os;
    os << "|<u>| = " << mine.size() << ", brute-force dual size " << truth.size()
       << ", constructed dual is <u>: " << all_u;
    res.detail = os.str();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

std::vector<PackedWord> code_spanning_words(const CodeSpec& code) {
  validate(code);
  const FactorData& fd = *code.fd;
  const FieldCtx& f = *fd.params().field;
  const std::uint64_t len = fd.params().length();
  std::vector<PackedWord> out;
  for (std::size_t j = 0; j < fd.size(); ++j) {
    const ChainCtx& ring = *fd.factor(j).chain;
    for (const auto& row : generator_rows(code.components[j])) {
      for (unsigned i = 0; i < ring.d() * ring.e(); ++i) {
        FieldElem g = f.one();
        for (std::uint32_t a = 0; a < f.m(); ++a, g *= f.generator()) {
          ChainElem c = ring.elem(Poly::monomial(g, i));
          std::vector<ChainPair> parts;
          for (std::size_t l = 0; l < fd.size(); ++l)
            parts.push_back({fd.factor(l).chain->zero(), fd.factor(l).chain->zero()});
          parts[j] = {c * row.a, c * row.b};
          out.push_back(pack(fd.assemble(parts), len));
        }
      }
    }
  }
  return out;
}

bool orthogonal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, const FieldCtx& field) {
  std::uint32_t s0 = 0, s1 = 0;
  for (std::size_t i = 0; 2 * i + 1 < a.size(); ++i) {
    s0 = field.add(s0, field.mul(a[2 * i], b[2 * i]));
    s1 = field.add(s1, field.add(field.mul(a[2 * i], b[2 * i + 1]), field.mul(a[2 * i + 1], b[2 * i])));
  }
  return s0 == 0 && s1 == 0;
}

IdealSpec random_spec(const ChainCtx& ctx, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  state = rng();
  const unsigned e = ctx.e();
  IdealSpec spec;
  switch (rng() % 5) {
    case 0: spec = {IdealKind::kI, 0, 0, ctx.zero()}; break;
    case 1: spec = {IdealKind::kII, 1 + static_cast<unsigned>(rng() % (e - 1)), 0, ctx.zero()}; break;
    case 2: spec = {IdealKind::kIII, static_cast<unsigned>(rng() % (e + 1)), 0, ctx.zero()}; break;
    case 3: spec = {IdealKind::kIV, 0, 1 + static_cast<unsigned>(rng() % (e - 1)), ctx.zero()}; break;
    default:
      if (e < 3) return IdealSpec::case_i(ctx.zero());
      spec.kind = IdealKind::kV;
      spec.k = 1 + static_cast<unsigned>(rng() % (e - 2));
      spec.t = 1 + static_cast<unsigned>(rng() % (e - spec.k - 1));
      spec.b = ctx.zero();
      break;
  }
  if (spec.kind != IdealKind::kIII) {
    auto range = residue_range(spec.kind, spec.k, spec.t, e);
    ResidueSet set(ctx, range.lo, range.hi);
    BigInt size = set.size();
    BigInt idx = 0;
    for (int i = 0; i < 4; ++i) idx = (idx << 64) + rng();
    spec.b = set.at(idx % size);
  }
  validate(spec);
  return spec;
}

CheckResult check_orthogonality(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda,
                                unsigned samples) {
  auto t0 = Clock::now();
  CheckResult res;
  res.name = "dual orthogonality and dimension " + tag(p, m, s, n, lambda);
  try {
    auto fd = instance(p, m, s, n, lambda);
    auto dfd = FactorData::build(dual_params(fd->params()));
    const FieldCtx& f = *fd->params().field;
    AmbientCoords ac(fd);
    std::uint64_t state = kDefaultSeed;
    std::size_t failures = 0;
    std::ostringstream why;
    for (unsigned i = 0; i < samples; ++i) {
      CodeSpec code{fd, {}};
      for (const auto& info : fd->factors()) code.components.push_back(random_spec(*info.chain, state));
      CodeSpec dual = as_code_spec(dual_code(code), dfd);
      bool ok = true;
      if (fd->has_pairing()) ok = dual_code_nu(code) == dual;
      auto cw = code_spanning_words(code);
      auto dw = code_spanning_words(dual);
      FpSpace cs(&ac.arith(), ac.dim()), ds(&ac.arith(), ac.dim());
      for (const auto& w : cw) cs.insert(ac.to_vec(w));
      for (const auto& w : dw) ds.insert(ac.to_vec(w));
      ok = ok && big_pow(p, cs.rank()) == code_size(code) && big_pow(p, ds.rank()) == code_size(dual);
      ok = ok && cs.rank() + ds.rank() == ac.dim();
      for (const auto& a : cs.rows()) {
        if (!ok) break;
        PackedWord aw = ac.to_word(a);
        for (const auto& b : ds.rows())
          if (!orthogonal(aw, ac.to_word(b), f)) {
            ok = false;
            break;
          }
      }
      if (!ok) {
        if (failures < 3) why << code_key(code) << " ";
        ++failures;
      }
    }
    res.pass = failures == 0;
    std::ostringstream os;
    os << samples << " sampled codes, " << failures << " failures";
    if (failures) os << ": " << why.str();
    res.detail = os.str();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = since(t0);
  return res;
}

std::vector<CheckResult> run_oracle_suite(SuiteLevel level) {
  std::vector<CheckResult> out;
  if (level == SuiteLevel::kQuick) {
    out.push_back(check_chain_classification(2, 1, 1, 1));
    out.push_back(check_chain_classification(3, 1, 1, 1));
    out.push_back(check_chain_classification(2, 1, 2, 1));
    out.push_back(check_chain_classification(2, 2, 1, 1));
    out.push_back(check_ambient_ideals(2, 1, 1, 1, 1));
    out.push_back(check_ambient_ideals(3, 1, 1, 1, 1));
    out.push_back(check_duals(3, 1, 1, 1, 1));
    out.push_back(check_duals(3, 1, 1, 1, -1));
    out.push_back(check_self_duals(3, 1, 1, 1, -1));
    out.push_back(check_orthogonality(5, 1, 1, 6, -1, 20));
    return out;
  }
  for (auto [p, m, d, s] : std::vector<std::array<unsigned, 4>>{
           {2, 1, 1, 1}, {2, 1, 2, 1}, {2, 1, 1, 2}, {3, 1, 1, 1}, {3, 1, 2, 1}, {5, 1, 1, 1}, {2, 2, 1, 1}})
    out.push_back(check_chain_classification(p, m, d, s));
  out.push_back(check_ambient_ideals(2, 1, 1, 1, 1));
  out.push_back(check_ambient_ideals(3, 1, 1, 1, 1));
  out.push_back(check_ambient_ideals(3, 1, 1, 2, 1));
  out.push_back(check_ambient_ideals(3, 1, 1, 2, -1));
  for (int lam : {1, -1}) {
    out.push_back(check_duals(3, 1, 1, 1, lam));
    out.push_back(check_duals(3, 1, 1, 2, lam));
  }
  out.push_back(check_duals(2, 1, 1, 3, 1));
  out.push_back(check_duals(2, 2, 1, 1, 1));
  for (int nu : {1, -1}) {
    out.push_back(check_self_duals(3, 1, 1, 1, nu));
    out.push_back(check_self_duals(3, 1, 1, 2, nu));
  }
  out.push_back(check_u_self_dual(5, 1, 1, 1, 3));
  out.push_back(check_orthogonality(5, 1, 1, 6, -1, 200));
  out.push_back(check_orthogonality(5, 1, 1, 4, 3, 200));
  out.push_back(check_orthogonality(2, 2, 1, 3, 1, 200));
  out.push_back(check_orthogonality(7, 1, 1, 3, 1, 100));
  return out;
}

}  // namespace ccring
