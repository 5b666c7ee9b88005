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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ccring/dual.hpp"
#include "ccring/oracle.hpp"
#include "support.hpp"

namespace {

using namespace ccring;
using testing::P;

struct Outcome {
  bool pass = true;
  std::string detail;
};

FactorData::Ptr ambient(std::uint32_t p, unsigned s, std::uint64_t n, std::int64_t lambda) {
  auto f = FieldCtx::make(p, 1);
  return FactorData::build(AmbientParams::make(f, s, n, f->from_int(lambda)));
}

std::vector<Poly> factors_of(const FieldCtx& f, std::int64_t a) {
  return testing::factor_polys(factor_squarefree(P(f, {-a, 0, 0, 0, 1})));
}

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += what + "; ";
  }
}

Outcome oracle_checks(const std::vector<CheckResult>& results) {
  Outcome o;
  for (const auto& r : results) {
    expect(o, r.pass, r.name + ": " + r.detail);
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "    " << (r.pass ? "ok  " : "FAIL") << " " << r.name << " [" << r.seconds << "s] "
         << r.detail << "\n";
    std::cout << line.str();
  }
  return o;
}

Outcome criterion1() {
  Outcome o;
  auto fd = ambient(5, 1, 6, -1);
  auto total = count_codes(*fd);
  auto self = count_self_dual(*fd, -1);
  expect(o, total == BigInt("62190883161"), "total " + total.str());
  expect(o, self == 249381, "self-dual " + self.str());
  o.detail += "total " + total.str() + ", self-dual " + self.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto fd = ambient(5, 1, 4, 3);
  auto total = count_codes(*fd);
  expect(o, fd->size() == 1, "expected one factor");
  auto by = count_ideals_by_kind(*fd->factor(0).chain);
  const char* want[] = {"390625", "391876", "6", "391876", "1878"};
  for (int i = 0; i < 5; ++i) expect(o, by[i].str() == want[i], std::string("case ") + want[i]);
  expect(o, total == 1176261, "total " + total.str());
  o.detail += "total " + total.str() + " = " + by[0].str() + "+" + by[1].str() + "+" + by[2].str() + "+" +
              by[3].str() + "+" + by[4].str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto check = [&](const BigInt& got, const char* want, const std::string& label) {
    expect(o, got.str() == want, label + " = " + got.str());
  };
  check(count_ideals(13, 1, 4, 1), "1628535353189467891702213785", "N(13,4,13)");
  check(pow(count_ideals(13, 1, 1, 1), 4), "92300403860395414742363374161", "N(13,1,13)^4");
  check(pow(count_ideals(13, 1, 2, 1), 2), "5022317475223730190748850625", "N(13,2,13)^2");
  check(pow(count_ideals(19, 1, 2, 1), 2), "98853624946129979125010756140470464728908752100", "N(19,2,19)^2");
  check(pow(count_ideals(19, 1, 1, 1), 2) * count_ideals(19, 1, 2, 1),
        "378733991979096789784301581334490215632932864000", "N(19,1,19)^2 N(19,2,19)");
  // The same numbers through factorization and per-factor products at length 4p.
  check(count_codes(*ambient(13, 1, 4, 2)), "1628535353189467891702213785", "count(13, lambda=2)");
  check(count_codes(*ambient(13, 1, 4, 3)), "92300403860395414742363374161", "count(13, lambda=3)");
  check(count_codes(*ambient(13, 1, 4, 10)), "5022317475223730190748850625", "count(13, lambda=10)");
  check(count_codes(*ambient(19, 1, 4, 13)), "98853624946129979125010756140470464728908752100", "count(19, lambda=13)");
  check(count_codes(*ambient(19, 1, 4, 7)), "378733991979096789784301581334490215632932864000", "count(19, lambda=7)");
  if (o.pass) o.detail = "five closed forms and five full-pipeline counts exact";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto f5 = FieldCtx::make(5, 1);
  expect(o,
         testing::factor_polys(factor_squarefree(P(*f5, {1, 0, 0, 0, 0, 0, 1}))) ==
             testing::sorted({P(*f5, {2, 1}), P(*f5, {4, 2, 1}), P(*f5, {3, 1}), P(*f5, {4, 3, 1})}),
         "x^6+1 over F_5");

  auto f19 = FieldCtx::make(19, 1);
  // a = 3 and a = 8 are paired with the products they actually multiply out to.
  const std::vector<std::tuple<int, Poly, Poly>> pairs = {
      {2, P(*f19, {13, 8, 1}), P(*f19, {13, 11, 1})},  {8, P(*f19, {12, 10, 1}), P(*f19, {12, 9, 1})},
      {3, P(*f19, {15, 12, 1}), P(*f19, {15, 7, 1})},  {10, P(*f19, {3, 5, 1}), P(*f19, {3, 14, 1})},
      {12, P(*f19, {8, 4, 1}), P(*f19, {8, 15, 1})},   {13, P(*f19, {14, 16, 1}), P(*f19, {14, 3, 1})},
      {14, P(*f19, {10, 18, 1}), P(*f19, {10, 1, 1})}, {15, P(*f19, {2, 17, 1}), P(*f19, {2, 2, 1})},
      {18, P(*f19, {18, 13, 1}), P(*f19, {18, 6, 1})},
  };
  for (const auto& [a, g, h] : pairs)
    expect(o, factors_of(*f19, a) == testing::sorted({g, h}), "x^4-" + std::to_string(a) + " over F_19");

  auto f13 = FieldCtx::make(13, 1);
  const std::vector<std::pair<int, std::vector<Poly>>> lists = {
      {1, {P(*f13, {1, 1}), P(*f13, {5, 1}), P(*f13, {12, 1}), P(*f13, {8, 1})}},
      {3, {P(*f13, {10, 1}), P(*f13, {3, 1}), P(*f13, {2, 1}), P(*f13, {11, 1})}},
      {9, {P(*f13, {7, 1}), P(*f13, {6, 1}), P(*f13, {9, 1}), P(*f13, {4, 1})}},
      {4, {P(*f13, {11, 0, 1}), P(*f13, {2, 0, 1})}},
      {10, {P(*f13, {6, 0, 1}), P(*f13, {7, 0, 1})}},
      {12, {P(*f13, {8, 0, 1}), P(*f13, {5, 0, 1})}},
  };
  for (const auto& [a, want] : lists)
    expect(o, factors_of(*f13, a) == testing::sorted(want), "x^4-" + std::to_string(a) + " over F_13");
  if (o.pass) o.detail = "1 + 9 + 6 factorizations exact (a=3 and a=8 matched by product)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto fd = ambient(5, 1, 6, -1);
  const FieldCtx& f = *fd->params().field;
  const std::vector<Poly> want = {
      P(f, {1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2}),
      P(f, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2}),
      P(f, {1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3}),
      P(f, {2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3}),
  };
  const std::vector<Poly> factors = {P(f, {2, 1}), P(f, {4, 2, 1}), P(f, {3, 1}), P(f, {4, 3, 1})};
  expect(o, fd->size() == 4, "four factors");
  for (std::size_t j = 0; j < 4 && j < fd->size(); ++j) {
    expect(o, fd->factor(j).f == factors[j], "factor " + std::to_string(j + 1));
    expect(o, fd->factor(j).idempotent == want[j], "idempotent " + std::to_string(j + 1));
  }
  if (o.pass) o.detail = "all four idempotents exact";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int cells = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 19u})
    for (std::uint32_t m : {1u, 2u})
      for (std::uint64_t d : {1u, 2u, 4u})
        for (unsigned s : {1u, 2u}) {
          ++cells;
          expect(o, count_ideals(p, m, d, s) == count_ideals_sumform(p, m, d, s),
                 "(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(d) + "," +
                     std::to_string(s) + ")");
        }
  if (o.pass) o.detail = std::to_string(cells) + " grid cells agree";
  return o;
}

Outcome criterion7() {
  return oracle_checks({check_chain_classification(2, 1, 1, 1), check_chain_classification(2, 1, 2, 1),
                        check_chain_classification(2, 1, 1, 2), check_chain_classification(3, 1, 1, 1),
                        check_chain_classification(3, 1, 2, 1), check_chain_classification(5, 1, 1, 1)});
}

Outcome criterion8() {
  return oracle_checks({check_duals(3, 1, 1, 1, 1), check_duals(3, 1, 1, 1, -1), check_duals(3, 1, 1, 2, 1),
                        check_duals(3, 1, 1, 2, -1)});
}

Outcome criterion9() {
  return oracle_checks({check_self_duals(3, 1, 1, 2, -1), check_u_self_dual(5, 1, 1, 1, 3)});
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 25; ++i) {
    auto params = testing::random_params(rng);
    auto fd = FactorData::build(params);
    expect(o, testing::idempotent_identities_hold(*fd),
           params.field->describe() + " s=" + std::to_string(params.s) + " n=" + std::to_string(params.n));
  }
  if (o.pass) o.detail = "25 random parameter sets";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "negacyclic length 30: total and self-dual counts", 5, criterion1},
      {2, "length 20, lambda=3: total and per-case counts", 1, criterion2},
      {3, "big counts at length 4p", 0, criterion3},
      {4, "factorization vectors", 0, criterion4},
      {5, "idempotents of x^30+1", 0, criterion5},
      {6, "closed form equals sum form", 0, criterion6},
      {7, "chain ring classification oracles", 120, criterion7},
      {8, "dual construction against brute force", 300, criterion8},
      {9, "self-dual enumeration against brute force", 0, criterion9},
      {10, "idempotent identities on random parameters", 0, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + "s limit)";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
