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

#include "ccring/fp_linalg.hpp"

#include "ccring/error.hpp"

namespace ccring {

FpArith::FpArith(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 255) throw Error(ErrorCode::kTooLarge, "oracle arithmetic needs p < 256");
  add_.resize(p * p);
  mul_.resize(p * p);
  inv_.assign(p, 0);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) {
      add_[a * p + b] = static_cast<std::uint8_t>((a + b) % p);
      mul_[a * p + b] = static_cast<std::uint8_t>((a * b) % p);
      if ((a * b) % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
}

FpMatrix::FpMatrix(const FpArith* ar, std::size_t rows, std::size_t cols)
    : ar_(ar), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

void FpMatrix::set_column(std::size_t j, std::span<const std::uint8_t> image) {
  for (std::size_t i = 0; i < rows_; ++i) a_[i * cols_ + j] = image[i];
}

FpVec FpMatrix::apply(std::span<const std::uint8_t> v) const {
  FpVec out(rows_, 0);
  const std::uint32_t p = ar_->p();
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::uint8_t* row = &a_[i * cols_];
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint32_t>(row[j]) * v[j];
    out[i] = static_cast<std::uint8_t>(acc % p);
  }
  return out;
}

void FpSpace::reduce(FpVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t c = v[pivots_[i]];
    if (!c) continue;
    std::uint8_t nc = ar_->neg(c);
    const FpVec& r = rows_[i];
    for (std::size_t k = pivots_[i]; k < dim_; ++k)
      if (r[k]) v[k] = ar_->add(v[k], ar_->mul(nc, r[k]));
  }
}

bool FpSpace::contains(std::span<const std::uint8_t> v) const {
  FpVec w(v.begin(), v.end());
  reduce(w);
  for (auto c : w)
    if (c) return false;
  return true;
}

bool FpSpace::insert(FpVec v) {
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && !v[piv]) ++piv;
  if (piv == dim_) return false;
  std::uint8_t s = ar_->inv(v[piv]);
  for (std::size_t k = piv; k < dim_; ++k) v[k] = ar_->mul(v[k], s);
  for (auto& r : rows_) {
    std::uint8_t c = r[piv];
    if (!c) continue;
    std::uint8_t nc = ar_->neg(c);
    for (std::size_t k = piv; k < dim_; ++k)
      if (v[k]) r[k] = ar_->add(r[k], ar_->mul(nc, v[k]));
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

void FpSpace::insert_all(const FpSpace& o) {
  for (const auto& r : o.rows_) insert(r);
}

bool FpSpace::contains_all(const FpSpace& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

std::string FpSpace::key() const {
  std::string k;
  k.reserve(rows_.size() * dim_ + 1);
  k.push_back(static_cast<char>(rows_.size()));
  for (const auto& r : rows_) k.append(reinterpret_cast<const char*>(r.data()), r.size());
  return k;
}

FpSpace closure(const FpArith* ar, std::size_t dim, const std::vector<FpVec>& gens,
                const std::vector<const FpMatrix*>& maps) {
  FpSpace s(ar, dim);
  std::vector<FpVec> queue = gens;
  while (!queue.empty()) {
    FpVec v = std::move(queue.back());
    queue.pop_back();
    FpVec w = v;
    s.reduce(w);
    bool nonzero = false;
    for (auto c : w) nonzero |= c != 0;
    if (!nonzero) continue;
    s.insert(w);
    for (const auto* m : maps) queue.push_back(m->apply(w));
  }
  return s;
}

}  // namespace ccring
