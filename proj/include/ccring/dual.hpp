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

#ifndef CCRING_DUAL_HPP_
#define CCRING_DUAL_HPP_

#include <optional>
#include <vector>

#include "ccring/ideals.hpp"

namespace ccring {

// The dual of a code in R[x]/(x^N - lambda); it lives in R[x]/(x^N - 1/lambda)
// and its j-th component sits over the monic reciprocal of f_j.
struct DualCodeSpec {
  AmbientParams params;
  std::vector<ChainCtx::Ptr> rings;
  std::vector<IdealSpec> components;
};

// a(1/x) where 1/x = lambda x^(N-1), reduced in the target ring. source
// carries the lambda of the ring a comes from.
ChainElem inv_x_image(const ChainElem& a, const ChainCtx& target, const AmbientParams& source);

// Image of one component under duality; c is the constant term of the factor.
IdealSpec dual_component(const IdealSpec& spec, const ChainCtx& target, const AmbientParams& source,
                         const FieldElem& c);

DualCodeSpec dual_code(const CodeSpec& code);
BigInt dual_code_size(const DualCodeSpec& dual);
AmbientParams dual_params(const AmbientParams& params);
// Reindexes a dual onto the factor data of its ambient ring.
CodeSpec as_code_spec(const DualCodeSpec& dual, FactorData::Ptr dual_fd);
// dual idempotents e_j(1/x) mod x^N - 1/lambda.
std::vector<Poly> dual_idempotents(const FactorData& fd);

// Dual inside the same ring; requires lambda^2 = 1.
CodeSpec dual_code_nu(const CodeSpec& code);
bool is_self_dual(const CodeSpec& code);

// b + nu delta x^(N-d) b(1/x) in K_j for a reciprocal-fixed factor j.
ChainElem self_dual_residual(const FactorData& fd, std::size_t j, const ChainElem& b);

BigInt count_self_dual(const FactorData& fd, int nu);

class SelfDualStream {
 public:
  SelfDualStream(FactorData::Ptr fd, int nu, std::optional<BigInt> limit = std::nullopt);

  std::optional<CodeSpec> next();

 private:
  bool advance_group(std::size_t g);
  void fill_group(std::size_t g);

  FactorData::Ptr fd_;
  std::optional<BigInt> limit_;
  BigInt emitted_ = 0;
  std::vector<std::vector<IdealSpec>> fixed_;
  std::vector<std::size_t> fixed_pos_;
  std::vector<IdealStream> paired_;
  std::vector<IdealSpec> current_;
  bool started_ = false;
  bool done_ = false;
};

// Solutions for a reciprocal-fixed factor, in enumeration order.
std::vector<IdealSpec> fixed_self_dual_components(const FactorData& fd, std::size_t j);

}  // namespace ccring

#endif  // CCRING_DUAL_HPP_
