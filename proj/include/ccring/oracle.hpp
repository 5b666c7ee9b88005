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

#ifndef CCRING_ORACLE_HPP_
#define CCRING_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ccring/dual.hpp"
#include "ccring/fp_linalg.hpp"

namespace ccring {

inline constexpr std::uint64_t kOracleBudget = 10'000'000;
inline constexpr std::uint64_t kExhaustiveMembershipBudget = 27 * 27;

// F_p coordinates on K^2: digits of A, then digits of B.
class PairCoords {
 public:
  explicit PairCoords(ChainCtx::Ptr ctx);

  const ChainCtx& ring() const { return *ctx_; }
  const FpArith& arith() const { return ar_; }
  std::size_t dim() const { return 2 * half_; }
  // |K^2|, saturating at 2^64 - 1.
  std::uint64_t space_size() const;

  FpVec to_vec(const ChainPair& v) const;
  ChainPair from_vec(const FpVec& v) const;
  FpVec from_index(std::uint64_t index) const;

  // Multiplication by x, by the field generator, and the map (A, B) -> (0, A).
  const std::vector<const FpMatrix*>& ring_maps() const { return ring_maps_; }
  const FpMatrix& shift_u() const { return u_; }

  FpSpace span(const std::vector<ChainPair>& gens) const;

 private:
  ChainCtx::Ptr ctx_;
  FpArith ar_;
  std::size_t half_;
  FpMatrix mx_;
  FpMatrix mg_;
  FpMatrix u_;
  std::vector<const FpMatrix*> ring_maps_;
};

// Every K-submodule of K^2, as the span of every pair of elements.
std::vector<FpSpace> brute_submodules(const PairCoords& pc, std::uint64_t budget = kOracleBudget);
// The submodules closed under (A, B) -> (0, A).
std::vector<FpSpace> brute_condition5(const PairCoords& pc, const std::vector<FpSpace>& submodules);
// Spans of the nine generator-matrix families of length-2 codes.
std::vector<FpSpace> generator_families(const PairCoords& pc);
// Number of length-2 linear codes over K.
BigInt length2_code_count(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s);

// F_p coordinates on R^N.
class AmbientCoords {
 public:
  explicit AmbientCoords(FactorData::Ptr fd);

  const FactorData& factors() const { return *fd_; }
  const FpArith& arith() const { return ar_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t space_size() const;

  FpVec to_vec(std::span<const std::uint32_t> word) const;
  PackedWord to_word(const FpVec& v) const;
  FpVec from_index(std::uint64_t index) const;

  // Multiplication by x, by u, and by the field generator.
  const std::vector<const FpMatrix*>& ring_maps() const { return maps_; }
  FpSpace ideal_of(const std::vector<FpVec>& gens) const;

 private:
  FactorData::Ptr fd_;
  FpArith ar_;
  std::size_t dim_;
  FpMatrix mx_;
  FpMatrix mu_;
  FpMatrix mg_;
  std::vector<const FpMatrix*> maps_;
};

struct AmbientIdealReport {
  std::size_t assembled = 0;
  std::size_t distinct = 0;
  bool all_closed = false;
  std::size_t principal_checked = 0;
  bool all_principal_found = false;
};

std::vector<FpSpace> brute_ambient_ideals(const AmbientCoords& ac, AmbientIdealReport& report,
                                          std::uint64_t budget = kOracleBudget);

// Codeword sets as sorted indices sum word_i q^i.
using WordSet = std::vector<std::uint64_t>;

std::uint64_t word_index(std::span<const std::uint32_t> word, std::uint32_t q);
WordSet codeword_set(const CodeSpec& code);
WordSet brute_dual(const std::vector<PackedWord>& words, const FieldCtx& field, std::uint64_t length,
                   std::uint64_t budget = kOracleBudget);
WordSet brute_dual(const CodeSpec& code, std::uint64_t budget = kOracleBudget);

// Monic irreducible of degree d, first in canonical order.
Poly first_irreducible(const FieldCtx& field, unsigned d);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CheckResult check_chain_classification(std::uint32_t p, std::uint32_t m, unsigned d, unsigned s);
CheckResult check_ambient_ideals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda);
CheckResult check_duals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda);
CheckResult check_self_duals(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, int nu);
// Words whose F_p span is the code: every x^i g^a multiple of every row.
std::vector<PackedWord> code_spanning_words(const CodeSpec& code);
bool orthogonal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, const FieldCtx& field);
// A pseudorandom valid spec over ctx.
IdealSpec random_spec(const ChainCtx& ctx, std::uint64_t& state);

// Sampled codes: the constructed dual is orthogonal to the code and has the
// complementary F_p dimension.
CheckResult check_orthogonality(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda,
                                unsigned samples);
CheckResult check_u_self_dual(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda);

enum class SuiteLevel { kQuick, kFull };
std::vector<CheckResult> run_oracle_suite(SuiteLevel level);

}  // namespace ccring

#endif  // CCRING_ORACLE_HPP_
