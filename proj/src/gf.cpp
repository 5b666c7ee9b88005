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

#include "ccring/gf.hpp"

#include <sstream>

#include "ccring/poly.hpp"

namespace ccring {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kZeroLambda: return "ZeroLambda";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kConstantInput: return "ConstantInput";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kGcdViolation: return "GcdViolation";
    case ErrorCode::kSZero: return "SZero";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotSelfPairedLambda: return "NotSelfPairedLambda";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kTableLimit = 1024;

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  auto prime = FieldCtx::make(p, 1);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> c(m + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = m; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    c[m] = 1;
    if (c[0] == 0) continue;
    if (is_irreducible(Poly(*prime, c))) return c;
  }
  throw Error(ErrorCode::kReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

FieldCtx::Ptr FieldCtx::make(std::uint32_t p, std::uint32_t m,
                             std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::kDegreeMismatch, "m must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q >= (1ULL << 31)) throw Error(ErrorCode::kTooLarge, "field order exceeds 2^31");
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    while (!mod.empty() && mod.back() % p == 0) mod.pop_back();
    for (auto& c : mod) c %= p;
    if (mod.size() != m + 1) throw Error(ErrorCode::kDegreeMismatch, "modulus degree must equal m");
    if (mod.back() != 1) throw Error(ErrorCode::kDegreeMismatch, "modulus must be monic");
    if (m > 1) {
      auto prime = FieldCtx::make(p, 1);
      if (!is_irreducible(Poly(*prime, mod)))
        throw Error(ErrorCode::kReducibleModulus, "modulus is reducible over F_p");
    }
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    mod = smallest_irreducible(p, m);
  }
  return Ptr(new FieldCtx(p, m, std::move(mod)));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) {
    pow_p_.push_back(q_);
    q_ *= p_;
  }
  if (m_ > 1 && q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t s = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
          s += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
        add_table_[a * q_ + b] = s;
        mul_table_[a * q_ + b] = mul_slow(a, b);
      }
    }
  }
  if (m_ > 1 && q_ <= (1u << 16)) {
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
      if (inv_table_[a]) continue;
      std::uint32_t r = a;
      // a^(q-2) by repeated squaring
      std::uint64_t e = q_ - 2;
      std::uint32_t acc = 1;
      while (e) {
        if (e & 1) acc = mul(acc, r);
        r = mul(r, r);
        e >>= 1;
      }
      inv_table_[a] = acc;
      inv_table_[acc] = a;
    }
  }
}

std::uint32_t FieldCtx::digit(std::uint32_t v, std::uint32_t i) const {
  return (v / pow_p_[i]) % p_;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < m_; ++i)
    s += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
  return s;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = digit(a, i);
    s += (d == 0 ? 0 : p_ - d) * pow_p_[i];
  }
  return s;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return a >= b ? a - b : a + p_ - b;
  return add(a, neg(b));
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint64_t da = digit(a, i);
    if (!da) continue;
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da * digit(b, j)) % p_;
  }
  for (std::uint32_t k = 2 * m_ - 1; k-- > m_;) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    for (std::uint32_t i = 0; i < m_; ++i)
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
    prod[k] = 0;
  }
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < m_; ++i) s += static_cast<std::uint32_t>(prod[i]) * pow_p_[i];
  return s;
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (m_ == 1) {
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      std::int64_t qt = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
      std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }
  if (!inv_table_.empty()) return inv_table_[a];
  std::uint64_t e = q_ - 2;
  std::uint32_t acc = 1, r = a;
  while (e) {
    if (e & 1) acc = mul(acc, r);
    r = mul(r, r);
    e >>= 1;
  }
  return acc;
}

FieldElem FieldCtx::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElem(this, static_cast<std::uint32_t>(r));
}

FieldElem FieldCtx::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > m_) throw Error(ErrorCode::kDegreeMismatch, "too many field coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw Error(ErrorCode::kRangeError, "field coefficient out of range");
    v += c[i] * pow_p_[i];
  }
  return FieldElem(this, v);
}

FieldElem FieldCtx::from_packed(std::uint32_t v) const {
  if (v >= q_) throw Error(ErrorCode::kRangeError, "packed value out of range");
  return FieldElem(this, v);
}

FieldElem FieldCtx::from_canonical_index(std::uint32_t idx) const {
  std::uint32_t v = 0;
  for (std::uint32_t i = m_; i-- > 0;) {
    v += (idx % p_) * pow_p_[i];
    idx /= p_;
  }
  return FieldElem(this, v);
}

FieldElem FieldCtx::generator() const {
  if (m_ == 1) return FieldElem(this, modulus_[0] == 0 ? 0 : p_ - modulus_[0]);
  return FieldElem(this, p_);
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

void check_same_field(const FieldCtx* a, const FieldCtx* b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw Error(ErrorCode::kContextMismatch, "operands from different fields");
}

const FieldCtx& FieldElem::field() const {
  if (!ctx_) throw Error(ErrorCode::kContextMismatch, "element has no field");
  return *ctx_;
}

std::vector<std::uint32_t> FieldElem::coeffs() const {
  std::vector<std::uint32_t> c(field().m());
  for (std::uint32_t i = 0; i < c.size(); ++i) c[i] = ctx_->digit(v_, i);
  return c;
}

FieldElem FieldElem::operator-() const { return FieldElem(ctx_, field().neg(v_)); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same_field(ctx_, o.ctx_);
  v_ = ctx_->add(v_, o.v_);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same_field(ctx_, o.ctx_);
  v_ = ctx_->sub(v_, o.v_);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same_field(ctx_, o.ctx_);
  v_ = ctx_->mul(v_, o.v_);
  return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  check_same_field(a.ctx_, b.ctx_);
  return a.v_ == b.v_;
}

FieldElem inverse(const FieldElem& a) { return FieldElem(a.ctx(), a.field().inv(a.packed())); }

FieldElem pow(const FieldElem& a, const BigInt& e) {
  if (e < 0) throw Error(ErrorCode::kRangeError, "negative exponent");
  const FieldCtx& f = a.field();
  std::uint32_t acc = 1;
  std::uint32_t base = a.packed();
  if (e == 0) return f.one();
  // Reduce the exponent modulo the multiplicative order bound.
  BigInt ee = e;
  if (base != 0) ee = ((e - 1) % (f.q() - 1)) + 1;
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(ee)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    acc = f.mul(acc, acc);
    if (boost::multiprecision::bit_test(ee, i)) acc = f.mul(acc, base);
  }
  return FieldElem(&f, acc);
}

FieldElem ps_root(const FieldElem& lambda, unsigned s) {
  if (lambda.is_zero()) throw Error(ErrorCode::kZeroLambda, "lambda must be nonzero");
  const FieldCtx& f = lambda.field();
  std::int64_t order = static_cast<std::int64_t>(f.q()) - 1;
  if (order == 1) return f.one();
  std::int64_t ps = 1;
  for (unsigned i = 0; i < s; ++i) ps = ps * f.p() % order;
  std::int64_t t = 0, nt = 1, r = order, nr = ps;
  while (nr) {
    std::int64_t qt = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
  }
  if (t < 0) t += order;
  return pow(lambda, BigInt(t));
}

std::uint32_t canonical_index(const FieldElem& a) {
  const FieldCtx& f = a.field();
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < f.m(); ++i) idx = idx * f.p() + f.digit(a.packed(), i);
  return idx;
}

bool canonical_less(const FieldElem& a, const FieldElem& b) {
  return canonical_index(a) < canonical_index(b);
}

}  // namespace ccring
