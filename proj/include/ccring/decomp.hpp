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

#ifndef CCRING_DECOMP_HPP_
#define CCRING_DECOMP_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "ccring/chain.hpp"

namespace ccring {

// Seed for factorization, overridable through CCRING_SEED.
std::uint64_t default_seed();

struct AmbientParams {
  FieldCtx::Ptr field;
  unsigned s = 1;
  std::uint64_t n = 1;
  FieldElem lambda;

  static AmbientParams make(FieldCtx::Ptr field, unsigned s, std::uint64_t n, const FieldElem& lambda);

  std::uint64_t length() const;
  unsigned nilpotency() const;
  // x^N - lambda
  Poly modulus() const;
};

// a + u b in R[x]/(x^N - lambda).
struct AmbientElem {
  Poly a;
  Poly b;
  friend bool operator==(const AmbientElem& x, const AmbientElem& y) { return x.a == y.a && x.b == y.b; }
};

// A + u B in K + uK.
struct ChainPair {
  ChainElem a;
  ChainElem b;
  friend bool operator==(const ChainPair& x, const ChainPair& y) { return x.a == y.a && x.b == y.b; }
};

struct FactorInfo {
  Poly f;
  unsigned degree = 0;
  Poly cofactor;
  Poly v;
  Poly w;
  Poly idempotent;
  ChainCtx::Ptr chain;
};

class FactorData {
 public:
  using Ptr = std::shared_ptr<const FactorData>;

  static Ptr build(const AmbientParams& params, std::uint64_t seed = default_seed());

  const AmbientParams& params() const { return params_; }
  const FieldElem& lambda0() const { return lambda0_; }
  std::size_t size() const { return factors_.size(); }
  const std::vector<FactorInfo>& factors() const { return factors_; }
  const FactorInfo& factor(std::size_t j) const;

  // Reciprocal pairing, present only when lambda^2 = 1. Indices are 0-based.
  bool has_pairing() const { return !tau_.empty(); }
  const std::vector<std::size_t>& tau() const { return tau_; }
  const std::vector<FieldElem>& delta() const { return delta_; }
  std::size_t fixed_count() const { return rho_; }
  std::size_t paired_count() const { return paired_; }

  Poly reduce(const Poly& a) const;
  AmbientElem reduce(const AmbientElem& a) const;
  AmbientElem multiply(const AmbientElem& x, const AmbientElem& y) const;

  ChainPair project(const AmbientElem& a, std::size_t j) const;
  AmbientElem assemble(const std::vector<ChainPair>& parts) const;

 private:
  AmbientParams params_;
  FieldElem lambda0_;
  std::vector<FactorInfo> factors_;
  std::vector<std::size_t> tau_;
  std::vector<FieldElem> delta_;
  std::size_t rho_ = 0;
  std::size_t paired_ = 0;
};

}  // namespace ccring

#endif  // CCRING_DECOMP_HPP_
