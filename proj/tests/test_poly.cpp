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

#include "ccring/error.hpp"
#include "support.hpp"

namespace ccring {
namespace {

using testing::factor_polys;
using testing::P;
using testing::sorted;

Poly random_poly(const FieldCtx& f, int deg, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(deg + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % f.q());
  return Poly(f, c);
}

TEST(Poly, Arithmetic) {
  auto f = FieldCtx::make(5, 1);
  EXPECT_EQ(P(*f, {2, 1}) * P(*f, {3, 1}), P(*f, {1, 0, 1}));
  EXPECT_EQ(P(*f, {1, 0, 0, 0, 0, 0, 1}) % P(*f, {4, 2, 1}), Poly(*f));
  Poly a = P(*f, {3, 1, 4});
  EXPECT_EQ(a * Poly::constant(f->one()), a);
  EXPECT_EQ(Poly(*f).degree(), kZeroDegree);
  EXPECT_EQ(P(*f, {1, 2, 3}).derivative(), P(*f, {2, 1}));
}

TEST(Poly, DivmodIdentity) {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {7u, 1u}}) {
    auto f = FieldCtx::make(p, m);
    for (int i = 0; i < 50; ++i) {
      Poly a = random_poly(*f, 12, rng);
      Poly b = random_poly(*f, 5, rng);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Poly, DivisionByZeroThrows) {
  auto f = FieldCtx::make(5, 1);
  EXPECT_THROW(divmod(P(*f, {1, 1}), Poly(*f)), Error);
}

TEST(Poly, Xgcd) {
  auto f = FieldCtx::make(5, 1);
  Poly a = P(*f, {2, 1}), b = P(*f, {3, 1});
  auto r = xgcd(a, b);
  EXPECT_TRUE(r.g.is_one());
  EXPECT_EQ(r.u * a + r.v * b, Poly::constant(f->one()));

  Poly s = P(*f, {1, 0, 1});
  EXPECT_EQ(xgcd(s * s, s).g, s);

  Poly c = P(*f, {1, 3});
  auto z = xgcd(c, Poly(*f));
  EXPECT_EQ(z.g, c.monic());
  EXPECT_EQ(z.u, Poly::constant(inverse(c.lead())));
  EXPECT_TRUE(z.v.is_zero());
}

TEST(Poly, XgcdBezoutRandom) {
  std::mt19937_64 rng(11);
  auto f = FieldCtx::make(3, 2);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(*f, 8, rng), b = random_poly(*f, 6, rng);
    auto r = xgcd(a, b);
    EXPECT_EQ(r.u * a + r.v * b, r.g);
    if (!r.g.is_zero()) {
      EXPECT_TRUE((a % r.g).is_zero());
      EXPECT_TRUE((b % r.g).is_zero());
    }
  }
}

TEST(Poly, Powmod) {
  auto f5 = FieldCtx::make(5, 1);
  Poly mod = P(*f5, {1, 0, 0, 0, 0, 0, 1});
  // x^24 = (x^6)^4 = 1
  EXPECT_EQ(powmod(Poly::x(*f5), 25, mod), Poly::x(*f5));
  EXPECT_EQ(powmod(P(*f5, {1, 2, 3}), 1, P(*f5, {0, 0, 1})), P(*f5, {1, 2}));
  auto f2 = FieldCtx::make(2, 1);
  EXPECT_EQ(powmod(P(*f2, {1, 1}), 2, P(*f2, {0, 0, 0, 1})), P(*f2, {1, 0, 1}));
}

TEST(Poly, PowmodMatchesRepeatedProduct) {
  std::mt19937_64 rng(3);
  auto f = FieldCtx::make(2, 2);
  Poly mod = P(*f, {1, 1, 0, 0, 0, 1, 1});
  Poly a = random_poly(*f, 5, rng);
  Poly acc = Poly::constant(f->one());
  for (int k = 0; k < 40; ++k) {
    EXPECT_EQ(powmod(a, k, mod), acc);
    acc = mulmod(acc, a, mod);
  }
}

TEST(Poly, ComposeMod) {
  auto f = FieldCtx::make(7, 1);
  Poly mod = P(*f, {3, 0, 0, 0, 1});
  Poly a = P(*f, {1, 2, 0, 5});
  Poly g = P(*f, {0, 0, 1});
  Poly expect = (P(*f, {1}) + P(*f, {2}) * g + P(*f, {5}) * g * g * g) % mod;
  EXPECT_EQ(compose_mod(a, g, mod), expect);
}

TEST(Poly, Reciprocal) {
  auto f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(reciprocal(P(*f5, {2, 1})), P(*f5, {1, 2}));
  EXPECT_EQ(reciprocal(P(*f5, {2, 1})).monic(), P(*f5, {3, 1}));
}

TEST(Poly, ReciprocalOfFactorDividesInverseBinomial) {
  auto f = FieldCtx::make(19, 1);
  for (int a : {2, 3, 8, 10, 12, 13, 14, 15, 18}) {
    Poly binom = P(*f, {-a, 0, 0, 0, 1});
    Poly inv_binom = P(*f, {0, 0, 0, 0, 1}) - Poly::constant(inverse(f->from_int(a)));
    for (const auto& g : factor_polys(factor_squarefree(binom))) {
      EXPECT_TRUE((inv_binom % reciprocal(g).monic()).is_zero()) << a;
    }
  }
}

TEST(Poly, Irreducibility) {
  auto f5 = FieldCtx::make(5, 1);
  EXPECT_TRUE(is_irreducible(P(*f5, {2, 0, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible(P(*f5, {1, 0, 1})));
  auto f3 = FieldCtx::make(3, 1);
  EXPECT_TRUE(is_irreducible(P(*f3, {1, 0, 1})));
}

TEST(Factor, NegacyclicLengthSix) {
  auto f = FieldCtx::make(5, 1);
  auto fac = factor_squarefree(P(*f, {1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(factor_polys(fac), sorted({P(*f, {2, 1}), P(*f, {3, 1}), P(*f, {4, 2, 1}), P(*f, {4, 3, 1})}));
}

TEST(Factor, QuarticBinomialIrreducible) {
  auto f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(factor_squarefree(P(*f5, {2, 0, 0, 0, 1})).factors.size(), 1u);
  auto f13 = FieldCtx::make(13, 1);
  for (int a : {2, 5, 6, 7, 8, 11}) EXPECT_EQ(factor_squarefree(P(*f13, {-a, 0, 0, 0, 1})).factors.size(), 1u) << a;
}

TEST(Factor, F19QuarticPairs) {
  auto f = FieldCtx::make(19, 1);
  const std::vector<std::tuple<int, Poly, Poly>> cases = {
      {2, P(*f, {13, 8, 1}), P(*f, {13, 11, 1})},   {8, P(*f, {12, 10, 1}), P(*f, {12, 9, 1})},
      {3, P(*f, {15, 12, 1}), P(*f, {15, 7, 1})},   {10, P(*f, {3, 5, 1}), P(*f, {3, 14, 1})},
      {12, P(*f, {8, 4, 1}), P(*f, {8, 15, 1})},    {13, P(*f, {14, 16, 1}), P(*f, {14, 3, 1})},
      {14, P(*f, {10, 18, 1}), P(*f, {10, 1, 1})},  {15, P(*f, {2, 17, 1}), P(*f, {2, 2, 1})},
      {18, P(*f, {18, 13, 1}), P(*f, {18, 6, 1})},
  };
  for (const auto& [a, g, h] : cases)
    EXPECT_EQ(factor_polys(factor_squarefree(P(*f, {-a, 0, 0, 0, 1}))), sorted({g, h})) << a;
}

TEST(Factor, F13QuarticSplittings) {
  auto f = FieldCtx::make(13, 1);
  const std::vector<std::pair<int, std::vector<Poly>>> cases = {
      {1, {P(*f, {1, 1}), P(*f, {5, 1}), P(*f, {12, 1}), P(*f, {8, 1})}},
      {3, {P(*f, {10, 1}), P(*f, {3, 1}), P(*f, {2, 1}), P(*f, {11, 1})}},
      {9, {P(*f, {7, 1}), P(*f, {6, 1}), P(*f, {9, 1}), P(*f, {4, 1})}},
      {4, {P(*f, {11, 0, 1}), P(*f, {2, 0, 1})}},
      {10, {P(*f, {6, 0, 1}), P(*f, {7, 0, 1})}},
      {12, {P(*f, {8, 0, 1}), P(*f, {5, 0, 1})}},
  };
  for (const auto& [a, expect] : cases)
    EXPECT_EQ(factor_polys(factor_squarefree(P(*f, {-a, 0, 0, 0, 1}))), sorted(expect)) << a;
}

TEST(Factor, RandomProductsRecovered) {
  std::mt19937_64 rng(99);
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    auto f = FieldCtx::make(p, m);
    for (int i = 0; i < 10; ++i) {
      Poly g = random_poly(*f, 14, rng);
      if (g.degree() < 1) continue;
      if (gcd(g, g.derivative()).degree() > 0) continue;
      auto fac = factor_squarefree(g);
      EXPECT_EQ(testing::product(fac), g);
      for (const auto& [h, mult] : fac.factors) {
        EXPECT_TRUE(is_irreducible(h));
        EXPECT_EQ(mult, 1u);
        EXPECT_TRUE(h.lead().is_one());
      }
      EXPECT_EQ(factor_polys(factor_squarefree(g, 12345)), factor_polys(fac));
    }
  }
}

}  // namespace
}  // namespace ccring
