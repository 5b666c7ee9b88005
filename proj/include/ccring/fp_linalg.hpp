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

#ifndef CCRING_FP_LINALG_HPP_
#define CCRING_FP_LINALG_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ccring {

using FpVec = std::vector<std::uint8_t>;

// Small prime field arithmetic on bytes; p < 256.
class FpArith {
 public:
  explicit FpArith(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * p_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * p_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return a ? static_cast<std::uint8_t>(p_ - a) : 0; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  std::uint32_t p_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
};

class FpMatrix {
 public:
  FpMatrix(const FpArith* ar, std::size_t rows, std::size_t cols);
  // Column j is the image of the j-th unit vector.
  void set_column(std::size_t j, std::span<const std::uint8_t> image);
  FpVec apply(std::span<const std::uint8_t> v) const;
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  const FpArith* ar_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> a_;
};

// Subspace of F_p^dim kept in reduced row echelon form.
class FpSpace {
 public:
  FpSpace(const FpArith* ar, std::size_t dim) : ar_(ar), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<FpVec>& rows() const { return rows_; }

  void reduce(FpVec& v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  bool insert(FpVec v);
  void insert_all(const FpSpace& o);
  bool contains_all(const FpSpace& o) const;

  // Canonical byte string; equal strings mean equal subspaces.
  std::string key() const;
  friend bool operator==(const FpSpace& a, const FpSpace& b) { return a.rows_ == b.rows_; }

  // Calls fn on every element of the subspace.
  template <typename Fn>
  void for_each(Fn&& fn) const;

 private:
  const FpArith* ar_;
  std::size_t dim_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing gens and stable under every map.
FpSpace closure(const FpArith* ar, std::size_t dim, const std::vector<FpVec>& gens,
                const std::vector<const FpMatrix*>& maps);

template <typename Fn>
void FpSpace::for_each(Fn&& fn) const {
  const std::size_t r = rows_.size();
  std::vector<std::uint8_t> coef(r, 0);
  FpVec v(dim_, 0);
  while (true) {
    fn(static_cast<const FpVec&>(v));
    std::size_t i = 0;
    for (; i < r; ++i) {
      for (std::size_t c = 0; c < dim_; ++c) v[c] = ar_->add(v[c], rows_[i][c]);
      if (++coef[i] < ar_->p()) break;
      coef[i] = 0;
    }
    if (i == r) return;
  }
}

}  // namespace ccring

#endif  // CCRING_FP_LINALG_HPP_
