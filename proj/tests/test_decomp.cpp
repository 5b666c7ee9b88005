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

#include <random>

#include "ccring/decomp.hpp"
#include "ccring/error.hpp"
#include "support.hpp"

namespace ccring {
namespace {

using testing::P;

AmbientParams make_params(std::uint32_t p, std::uint32_t m, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto f = FieldCtx::make(p, m);
  return AmbientParams::make(f, s, n, f->from_int(lambda));
}

ErrorCode code_of(std::uint32_t p, unsigned s, std::uint64_t n, std::int64_t lambda) {
  try {
    make_params(p, 1, s, n, lambda);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

TEST(AmbientParams, Validation) {
  EXPECT_EQ(code_of(5, 0, 6, 4), ErrorCode::kSZero);
  EXPECT_EQ(code_of(5, 1, 10, 4), ErrorCode::kGcdViolation);
  EXPECT_EQ(code_of(5, 1, 6, 0), ErrorCode::kZeroLambda);
  auto params = make_params(5, 1, 2, 6, 4);
  EXPECT_EQ(params.length(), 150u);
  EXPECT_EQ(params.nilpotency(), 25u);
}

struct Negacyclic30 : ::testing::Test {
  FactorData::Ptr fd = FactorData::build(make_params(5, 1, 1, 6, -1));
  const FieldCtx& f = *fd->params().field;
};

TEST_F(Negacyclic30, FactorsAndPairing) {
  ASSERT_EQ(fd->size(), 4u);
  EXPECT_EQ(fd->factor(0).f, P(f, {2, 1}));
  EXPECT_EQ(fd->factor(1).f, P(f, {4, 2, 1}));
  EXPECT_EQ(fd->factor(2).f, P(f, {3, 1}));
  EXPECT_EQ(fd->factor(3).f, P(f, {4, 3, 1}));
  EXPECT_EQ(fd->lambda0(), f.from_int(4));
  EXPECT_TRUE(fd->has_pairing());
  EXPECT_EQ(fd->fixed_count(), 0u);
  EXPECT_EQ(fd->paired_count(), 2u);
  EXPECT_EQ(fd->tau(), (std::vector<std::size_t>{2, 3, 0, 1}));
  EXPECT_EQ(fd->delta()[0], f.from_int(3));
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(fd->delta()[j], inverse(fd->factor(j).f.coeff(0)));
    EXPECT_EQ(reciprocal(fd->factor(j).f).monic(), fd->factor(fd->tau()[j]).f);
  }
}

TEST_F(Negacyclic30, Idempotents) {
  EXPECT_EQ(fd->factor(0).idempotent, P(f, {1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2}));
  EXPECT_EQ(fd->factor(1).idempotent, P(f, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2}));
  EXPECT_EQ(fd->factor(2).idempotent, P(f, {1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3}));
  EXPECT_EQ(fd->factor(3).idempotent, P(f, {2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3}));
  EXPECT_TRUE(testing::idempotent_identities_hold(*fd));
}

TEST_F(Negacyclic30, ProjectAndAssemble) {
  AmbientElem e1{fd->factor(0).idempotent, Poly(f)};
  EXPECT_TRUE(fd->project(e1, 0).a.value().is_one());
  EXPECT_TRUE(fd->project(e1, 1).a.is_zero());
  AmbientElem one{Poly::constant(f.one()), Poly(f)};
  std::vector<ChainPair> ones, unit_first;
  for (std::size_t j = 0; j < fd->size(); ++j) {
    auto pj = fd->project(one, j);
    EXPECT_TRUE(pj.a.value().is_one());
    EXPECT_TRUE(pj.b.is_zero());
    const auto& k = *fd->factor(j).chain;
    ones.push_back({k.one(), k.zero()});
    unit_first.push_back({j == 0 ? k.one() : k.zero(), k.zero()});
  }
  EXPECT_EQ(fd->assemble(ones), one);
  EXPECT_EQ(fd->assemble(unit_first), e1);
}

TEST(FactorData, ProjectAssembleRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto fd = FactorData::build(testing::random_params(rng));
    const FieldCtx& f = *fd->params().field;
    const auto len = fd->params().length();
    for (int i = 0; i < 5; ++i) {
      std::vector<std::uint32_t> a(len), b(len);
      for (auto& v : a) v = static_cast<std::uint32_t>(rng() % f.q());
      for (auto& v : b) v = static_cast<std::uint32_t>(rng() % f.q());
      AmbientElem g{Poly(f, a), Poly(f, b)};
      std::vector<ChainPair> parts;
      for (std::size_t j = 0; j < fd->size(); ++j) parts.push_back(fd->project(g, j));
      EXPECT_EQ(fd->assemble(parts), g);
      for (std::size_t j = 0; j < fd->size(); ++j) EXPECT_EQ(fd->project(fd->assemble(parts), j), parts[j]);
    }
  }
}

TEST(FactorData, SingleLinearFactor) {
  auto fd = FactorData::build(make_params(5, 1, 1, 1, 2));
  const FieldCtx& f = *fd->params().field;
  ASSERT_EQ(fd->size(), 1u);
  EXPECT_EQ(fd->lambda0(), pow(f.from_int(2), 5));
  EXPECT_EQ(fd->factor(0).f, Poly::x(f) - Poly::constant(fd->lambda0()));
  EXPECT_TRUE(fd->factor(0).idempotent.is_one());
}

TEST(FactorData, NoPairingForGeneralLambda) {
  auto fd = FactorData::build(make_params(5, 1, 1, 4, 3));
  EXPECT_FALSE(fd->has_pairing());
  ASSERT_EQ(fd->size(), 1u);
  EXPECT_EQ(fd->factor(0).f, testing::P(*fd->params().field, {2, 0, 0, 0, 1}));
}

TEST(FactorData, IdempotentIdentitiesOnRandomParameters) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    auto params = testing::random_params(rng);
    auto fd = FactorData::build(params);
    EXPECT_TRUE(testing::idempotent_identities_hold(*fd))
        << params.field->describe() << " n=" << params.n << " s=" << params.s;
    std::size_t total = 0;
    for (const auto& info : fd->factors()) total += info.degree;
    EXPECT_EQ(total, params.n);
  }
}

TEST(FactorData, SeedDoesNotChangeResult) {
  auto params = make_params(7, 1, 1, 12, 1);
  auto a = FactorData::build(params, 1), b = FactorData::build(params, 987654321);
  ASSERT_EQ(a->size(), b->size());
  for (std::size_t j = 0; j < a->size(); ++j) EXPECT_EQ(a->factor(j).idempotent, b->factor(j).idempotent);
}

}  // namespace
}  // namespace ccring
