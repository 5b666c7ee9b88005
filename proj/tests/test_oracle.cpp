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

#include <gtest/gtest.h>

#include "ccring/dual.hpp"
#include "ccring/oracle.hpp"

namespace ccring {
namespace {

ChainCtx::Ptr chain(std::uint32_t p, std::uint32_t m, unsigned d, unsigned e) {
  auto f = FieldCtx::make(p, m);
  return ChainCtx::make(f, first_irreducible(*f, d), e);
}

FactorData::Ptr ambient(std::uint32_t p, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto f = FieldCtx::make(p, 1);
  return FactorData::build(AmbientParams::make(f, s, n, f->from_int(lambda)));
}

TEST(BruteSubmodules, CountsMatchFormula) {
  PairCoords two(chain(2, 1, 1, 2));
  auto subs2 = brute_submodules(two);
  EXPECT_EQ(subs2.size(), 15u);
  EXPECT_EQ(BigInt(subs2.size()), length2_code_count(2, 1, 1, 1));
  EXPECT_EQ(brute_condition5(two, subs2).size(), 7u);

  PairCoords three(chain(3, 1, 1, 3));
  auto subs3 = brute_submodules(three);
  EXPECT_EQ(subs3.size(), 76u);
  EXPECT_EQ(brute_condition5(three, subs3).size(), 16u);
}

TEST(BruteSubmodules, FamiliesCoverEverySubmodule) {
  PairCoords pc(chain(2, 1, 1, 4));
  auto subs = brute_submodules(pc);
  auto fams = generator_families(pc);
  std::set<std::string> a, b;
  for (const auto& s : subs) a.insert(s.key());
  for (const auto& s : fams) b.insert(s.key());
  EXPECT_EQ(a, b);
}

TEST(BruteDual, ZeroAndFull) {
  auto fd = ambient(3, 1, 1, 1);
  CodeSpec zero{fd, {IdealSpec::case_iii(*fd->factor(0).chain, 3)}};
  CodeSpec full{fd, {IdealSpec::case_iii(*fd->factor(0).chain, 0)}};
  EXPECT_EQ(brute_dual(zero).size(), 729u);
  EXPECT_EQ(brute_dual(full).size(), 1u);
  EXPECT_EQ(codeword_set(full).size(), 729u);
}

TEST(Orthogonal, InnerProduct) {
  auto f = FieldCtx::make(3, 1);
  // (1 + u) . (2 + u) = 2 + 3u = 2
  std::vector<std::uint32_t> a{1, 1}, b{2, 1}, c{0, 1};
  EXPECT_FALSE(orthogonal(a, b, *f));
  EXPECT_TRUE(orthogonal(c, c, *f));
}

TEST(Checks, QuickInstances) {
  for (const auto& r : {check_chain_classification(2, 1, 1, 1), check_chain_classification(3, 1, 1, 1),
                        check_ambient_ideals(2, 1, 1, 1, 1), check_duals(3, 1, 1, 1, -1),
                        check_self_duals(3, 1, 1, 1, 1), check_orthogonality(5, 1, 1, 6, -1, 10)})
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}

}  // namespace
}  // namespace ccring
