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

#ifndef CCRING_TESTS_SUPPORT_HPP_
#define CCRING_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <initializer_list>
#include <vector>

#include <random>

#include "ccring/decomp.hpp"

namespace ccring::testing {

// Little-endian integer coefficients in the prime subfield.
inline Poly P(const FieldCtx& f, std::initializer_list<std::int64_t> c) { return Poly(f, c); }

inline std::vector<Poly> sorted(std::vector<Poly> v) {
  std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
  return v;
}

inline Poly product(const Factorization& fac) {
  Poly out = Poly::constant(fac.unit);
  for (const auto& [g, mult] : fac.factors)
    for (unsigned i = 0; i < mult; ++i) out = out * g;
  return out;
}

inline std::vector<Poly> factor_polys(const Factorization& fac) {
  std::vector<Poly> out;
  for (const auto& fm : fac.factors) out.push_back(fm.first);
  return sorted(out);
}

// Random ambient parameters: p in {2,3,5,7}, m <= 2, s <= 2, n <= 12.
inline AmbientParams random_params(std::mt19937_64& rng) {
  static const std::uint32_t primes[] = {2, 3, 5, 7};
  const std::uint32_t p = primes[rng() % 4];
  auto field = FieldCtx::make(p, 1 + static_cast<std::uint32_t>(rng() % 2));
  const unsigned s = 1 + static_cast<unsigned>(rng() % 2);
  std::uint64_t n;
  do n = 1 + rng() % 12; while (n % p == 0);
  auto lambda = field->from_packed(1 + static_cast<std::uint32_t>(rng() % (field->q() - 1)));
  return AmbientParams::make(field, s, n, lambda);
}

// Sum to one, idempotent, pairwise orthogonal.
inline bool idempotent_identities_hold(const FactorData& fd) {
  const FieldCtx& f = *fd.params().field;
  Poly sum(f);
  for (std::size_t i = 0; i < fd.size(); ++i) {
    const Poly& ei = fd.factor(i).idempotent;
    sum += ei;
    for (std::size_t j = i; j < fd.size(); ++j) {
      Poly prod = fd.reduce(ei * fd.factor(j).idempotent);
      if (prod != (i == j ? ei : Poly(f))) return false;
    }
  }
  return fd.reduce(sum).is_one();
}

}  // namespace ccring::testing

#endif  // CCRING_TESTS_SUPPORT_HPP_
