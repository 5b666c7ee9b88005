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

#ifndef CCRING_IDEALS_HPP_
#define CCRING_IDEALS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccring/decomp.hpp"

namespace ccring {

enum class IdealKind { kI, kII, kIII, kIV, kV };

const char* kind_name(IdealKind kind);
IdealKind parse_kind(const std::string& name);

// One ideal of K + uK.
//   I      <f b + u>
//   II(k)  <f^{k+1} b + u f^k>
//   III(k) <f^k, u f^k>
//   IV(t)  <f b + u, f^t>
//   V(k,t) <f^{k+1} b + u f^k, f^{k+t}>
struct IdealSpec {
  IdealKind kind = IdealKind::kIII;
  unsigned k = 0;
  unsigned t = 0;
  ChainElem b;

  static IdealSpec case_i(const ChainElem& b);
  static IdealSpec case_ii(unsigned k, const ChainElem& b);
  static IdealSpec case_iii(const ChainCtx& ctx, unsigned k);
  static IdealSpec case_iv(unsigned t, const ChainElem& b);
  static IdealSpec case_v(unsigned k, unsigned t, const ChainElem& b);

  const ChainCtx& ring() const { return b.ring(); }
  std::string to_string() const;

  friend bool operator==(const IdealSpec& x, const IdealSpec& y);
  friend bool operator!=(const IdealSpec& x, const IdealSpec& y) { return !(x == y); }
};

struct ResidueRange {
  unsigned lo;
  unsigned hi;
};

// Range of admissible b for a case; lo <= hi, possibly both zero.
ResidueRange residue_range(IdealKind kind, unsigned k, unsigned t, unsigned e);

void validate(const IdealSpec& spec);
BigInt ideal_size(const IdealSpec& spec);
bool ideal_member(const ChainPair& xi, const IdealSpec& spec);
// K-module generators (A, B) of the ideal in the pair model.
std::vector<ChainPair> generator_rows(const IdealSpec& spec);

BigInt count_ideals(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s);
BigInt count_ideals(const ChainCtx& ctx);
BigInt count_ideals_sumform(std::uint32_t p, std::uint32_t m, std::uint64_t d, unsigned s);
BigInt count_ideals_sumform(const ChainCtx& ctx);
// Number of ideals of each kind, indexed by IdealKind.
std::array<BigInt, 5> count_ideals_by_kind(const ChainCtx& ctx);

class IdealStream {
 public:
  explicit IdealStream(ChainCtx::Ptr ctx);

  std::optional<IdealSpec> next();
  void reset();

 private:
  struct Block {
    IdealKind kind;
    unsigned k;
    unsigned t;
  };

  ChainCtx::Ptr ctx_;
  std::vector<Block> blocks_;
  std::size_t block_ = 0;
  std::optional<ResidueSet> set_;
  std::optional<ResidueSet::Cursor> cursor_;
  bool started_ = false;
};

struct CodeSpec {
  FactorData::Ptr fd;
  std::vector<IdealSpec> components;

  const AmbientParams& params() const { return fd->params(); }
  friend bool operator==(const CodeSpec& x, const CodeSpec& y) { return x.components == y.components; }
};

void validate(const CodeSpec& code);
BigInt code_size(const CodeSpec& code);
BigInt count_codes(const FactorData& fd);

class CodeStream {
 public:
  explicit CodeStream(FactorData::Ptr fd, std::optional<BigInt> limit = std::nullopt);

  std::optional<CodeSpec> next();

 private:
  FactorData::Ptr fd_;
  std::optional<BigInt> limit_;
  BigInt emitted_ = 0;
  std::vector<IdealStream> streams_;
  std::vector<IdealSpec> current_;
  bool started_ = false;
  bool done_ = false;
};

inline constexpr std::uint64_t kDefaultMaterializationBound = 1ULL << 24;

// Packed codeword: position i holds a_{i,0} at 2i and a_{i,1} at 2i+1, each a
// packed field value.
using PackedWord = std::vector<std::uint32_t>;

PackedWord pack(const AmbientElem& a, std::uint64_t length);
AmbientElem unpack(const FieldCtx& f, std::span<const std::uint32_t> word);

// Visits every codeword exactly once.
void for_each_codeword(const CodeSpec& code, const std::function<void(std::span<const std::uint32_t>)>& fn,
                       std::uint64_t bound = kDefaultMaterializationBound);
std::vector<AmbientElem> code_codewords(const CodeSpec& code, std::uint64_t bound = kDefaultMaterializationBound);

}  // namespace ccring

#endif  // CCRING_IDEALS_HPP_
