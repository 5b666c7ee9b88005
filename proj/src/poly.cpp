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

#include "ccring/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace ccring {

Poly::Poly(const FieldCtx& f, std::vector<std::uint32_t> packed) : ctx_(&f), c_(std::move(packed)) {
  for (auto v : c_)
    if (v >= f.q()) throw Error(ErrorCode::kRangeError, "coefficient out of range");
  trim();
}

Poly::Poly(const FieldCtx& f, const std::vector<FieldElem>& coeffs) : ctx_(&f) {
  c_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    check_same_field(&f, c.ctx());
    c_.push_back(c.packed());
  }
  trim();
}

Poly::Poly(const FieldCtx& f, std::initializer_list<std::int64_t> ints) : ctx_(&f) {
  for (auto v : ints) c_.push_back(f.from_int(v).packed());
  trim();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), std::vector<std::uint32_t>{c.packed()}); }

Poly Poly::monomial(const FieldElem& c, std::size_t k) {
  std::vector<std::uint32_t> v(k + 1, 0);
  v[k] = c.packed();
  return Poly(c.field(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem Poly::coeff(std::size_t i) const {
  return FieldElem(ctx_, i < c_.size() ? c_[i] : 0);
}

FieldElem Poly::lead() const {
  if (c_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of zero");
  return FieldElem(ctx_, c_.back());
}

FieldElem Poly::eval(const FieldElem& at) const {
  check_same_field(ctx_, at.ctx());
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, at.packed()), c_[i]);
  return FieldElem(ctx_, acc);
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * inverse(lead());
}

Poly Poly::derivative() const {
  Poly r(*ctx_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = ctx_->mul(c_[i], ctx_->from_int(static_cast<std::int64_t>(i % ctx_->p())).packed());
  r.trim();
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    auto co = coeff(i).coeffs();
    std::string cs;
    if (ctx_->m() == 1) {
      cs = std::to_string(co[0]);
    } else {
      cs = "[";
      for (std::size_t k = 0; k < co.size(); ++k) cs += (k ? "," : "") + std::to_string(co[k]);
      cs += "]";
    }
    if (i == 0) {
      os << cs;
    } else {
      if (c_[i] != 1) os << cs << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = ctx_->neg(v);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_field(ctx_, o.ctx_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_field(ctx_, o.ctx_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a.ctx_, b.ctx_);
  Poly r(*a.ctx_);
  if (a.c_.empty() || b.c_.empty()) return r;
  const FieldCtx& f = *a.ctx_;
  std::vector<std::uint32_t> out(a.c_.size() + b.c_.size() - 1, 0);
  if (f.m() == 1) {
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      std::uint64_t ai = a.c_[i];
      if (!ai) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + ai * b.c_[j]) % p;
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  r.c_ = std::move(out);
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElem& c) {
  check_same_field(ctx_, c.ctx());
  for (auto& v : c_) v = ctx_->mul(v, c.packed());
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  check_same_field(a.ctx_, b.ctx_);
  return a.c_ == b.c_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a.ctx(), b.ctx());
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const FieldCtx& f = a.field();
  std::vector<std::uint32_t> r = a.raw();
  const auto& bc = b.raw();
  std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Poly(f), a};
  std::vector<std::uint32_t> q(r.size() - db, 0);
  std::uint32_t linv = f.inv(bc.back());
  for (std::size_t k = r.size(); k-- > db;) {
    std::uint32_t c = r[k];
    if (!c) continue;
    c = f.mul(c, linv);
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(c, bc[i]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Xgcd xgcd(const Poly& a, const Poly& b) {
  check_same_field(a.ctx(), b.ctx());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kBothZero, "gcd of two zero polynomials");
  const FieldCtx& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FieldElem li = inverse(r0.lead());
  return {r0 * li, s0 * li, t0 * li};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kBothZero, "gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& a, const BigInt& e, const Poly& modulus) {
  if (modulus.degree() < 1) throw Error(ErrorCode::kBadModulus, "modulus must have positive degree");
  if (e < 0) throw Error(ErrorCode::kRangeError, "negative exponent");
  const FieldCtx& f = modulus.field();
  Poly base = a % modulus;
  Poly acc = Poly::constant(f.one());
  if (e == 0) return acc % modulus;
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, modulus);
    if (boost::multiprecision::bit_test(e, i)) acc = mulmod(acc, base, modulus);
  }
  return acc;
}

Poly compose_mod(const Poly& a, const Poly& g, const Poly& modulus) {
  const FieldCtx& f = modulus.field();
  Poly acc(f);
  Poly gm = g % modulus;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = mulmod(acc, gm, modulus);
    acc += Poly::constant(a.coeff(i));
  }
  return acc % modulus;
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "reciprocal of zero");
  std::vector<std::uint32_t> c = f.raw();
  std::reverse(c.begin(), c.end());
  return Poly(f.field(), std::move(c));
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly random_poly(const FieldCtx& f, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
  std::vector<std::uint32_t> c(len);
  for (auto& v : c) v = dist(rng);
  return Poly(f, std::move(c));
}

// g is monic, squarefree, and every irreducible factor has degree i.
void equal_degree_split(const Poly& g, unsigned i, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(g.degree()) == i) {
    out.push_back(g);
    return;
  }
  const FieldCtx& f = g.field();
  BigInt qi = big_pow(f.q(), i);
  while (true) {
    Poly a = random_poly(f, static_cast<std::size_t>(g.degree()), rng);
    if (a.degree() < 1) continue;
    Poly b(f);
    if (f.p() == 2) {
      std::uint64_t terms = static_cast<std::uint64_t>(f.m()) * i;
      Poly t = a % g;
      b = t;
      for (std::uint64_t k = 1; k < terms; ++k) {
        t = mulmod(t, t, g);
        b += t;
      }
    } else {
      b = powmod(a, (qi - 1) / 2, g) - Poly::constant(f.one());
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, i, rng, out);
      equal_degree_split(g / h, i, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& fin) {
  if (fin.degree() < 1) return false;
  Poly f = fin.monic();
  const FieldCtx& fc = f.field();
  unsigned d = static_cast<unsigned>(f.degree());
  if (d == 1) return true;
  Poly x = Poly::x(fc);
  std::vector<Poly> frob;
  frob.reserve(d + 1);
  frob.push_back(x % f);
  for (unsigned i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), BigInt(fc.q()), f));
  if (frob[d] != x % f) return false;
  for (auto r : prime_divisors(d)) {
    Poly h = frob[d / r] - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

Factorization factor_squarefree(const Poly& fin, std::uint64_t seed) {
  if (fin.degree() < 1) throw Error(ErrorCode::kConstantInput, "cannot factor a constant");
  const FieldCtx& fc = fin.field();
  Factorization out;
  out.unit = fin.lead();
  Poly g = fin.monic();
  if (gcd(g, g.derivative()).degree() != 0) throw Error(ErrorCode::kNotSquarefree, "input is not squarefree");
  std::mt19937_64 rng(seed);
  std::vector<Poly> irreducibles;
  Poly x = Poly::x(fc);
  Poly h = x % g;
  for (unsigned i = 1; g.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, BigInt(fc.q()), g);
    Poly gi = gcd(g, h - x);
    if (gi.degree() > 0) {
      equal_degree_split(gi, i, rng, irreducibles);
      g = g / gi;
      h = h % g;
    }
  }
  if (g.degree() > 0) irreducibles.push_back(g);
  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
  for (auto& p : irreducibles) out.factors.emplace_back(std::move(p), 1u);
  return out;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t x = canonical_index(a.coeff(i)), y = canonical_index(b.coeff(i));
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace ccring
