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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccring/cli.hpp"
#include "ccring/error.hpp"
#include "ccring/json_io.hpp"

namespace ccring {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(CliConfig c, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(c, in, out, err);
  return {code, out.str(), err.str()};
}

CliConfig ambient(const std::string& cmd, std::uint32_t p, unsigned s, std::uint64_t n,
                  std::optional<std::string> lambda) {
  CliConfig c;
  c.command = cmd;
  c.p = p;
  c.s = s;
  c.n = n;
  c.lambda = std::move(lambda);
  return c;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(Json, FieldElements) {
  auto f4 = FieldCtx::make(2, 2);
  auto g = f4->generator();
  EXPECT_EQ(to_json(g).dump(), "[0,1]");
  EXPECT_EQ(field_elem_from_json(*f4, Json::parse("[0,1]")), g);
  auto f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(to_json(f5->from_int(3)).dump(), "3");
  EXPECT_EQ(field_elem_from_json(*f5, Json(-1)), f5->from_int(4));
  EXPECT_THROW(field_elem_from_json(*f5, Json(5)), Error);
  EXPECT_THROW(field_elem_from_json(*f4, Json(1)), Error);
}

TEST(Json, Polynomials) {
  auto f = FieldCtx::make(3, 2);
  Poly a(*f, std::vector<std::uint32_t>{4, 0, 7});
  EXPECT_EQ(poly_from_json(*f, to_json(a)), a);
  EXPECT_EQ(to_json(Poly(*f)).dump(), "[]");
  EXPECT_THROW(poly_from_json(*f, Json::parse("[[1,0],[0,0]]")), Error);
}

TEST(Json, ParamsRoundTrip) {
  auto f = FieldCtx::make(3, 2);
  auto params = AmbientParams::make(f, 2, 4, f->generator());
  auto back = params_from_json(to_json(params));
  EXPECT_TRUE(back.field->same_as(*f));
  EXPECT_EQ(back.s, 2u);
  EXPECT_EQ(back.n, 4u);
  EXPECT_EQ(to_json(back), to_json(params));
}

TEST(Json, CodeSpecRejectsBadInput) {
  auto c = ambient("enumerate", 5, 1, 6, "-1");
  c.limit = BigInt(1);
  Json j = Json::parse(invoke(c).out);
  Json wrong_size = j;
  wrong_size["size"] = "7";
  EXPECT_THROW(code_from_json(wrong_size), Error);
  Json wrong_case = j;
  wrong_case["components"][0]["case"] = "VI";
  EXPECT_THROW(code_from_json(wrong_case), Error);
  Json short_list = j;
  short_list["components"].erase(0);
  EXPECT_THROW(code_from_json(short_list), Error);
}

TEST(Cli, HeadlineCounts) {
  EXPECT_EQ(invoke(ambient("count", 5, 1, 6, "4")).out, "62190883161\n");
  EXPECT_EQ(invoke(ambient("count", 5, 1, 4, "3")).out, "1176261\n");
  auto sd = ambient("selfdual", 5, 1, 6, std::nullopt);
  sd.count_only = true;
  auto r = invoke(sd);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "249381\n");
}

TEST(Cli, ValidationExitCodes) {
  for (const auto& c : {ambient("count", 5, 0, 6, "4"), ambient("count", 5, 1, 10, "4"),
                        ambient("count", 5, 1, 6, "0"), ambient("count", 5, 1, 6, std::nullopt),
                        ambient("count", 5, 1, 6, "[1,2]"), ambient("count", 6, 1, 5, "1"),
                        ambient("selfdual", 5, 1, 4, "3")}) {
    auto r = invoke(c);
    EXPECT_EQ(r.code, kExitValidation) << c.command;
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
  CliConfig bad_dual;
  bad_dual.command = "dual";
  EXPECT_EQ(invoke(bad_dual, "{not json").code, kExitValidation);
}

TEST(Cli, EnumerateRoundTrips) {
  auto c = ambient("enumerate", 3, 1, 2, "1");
  auto r = invoke(c);
  auto all = lines(r.out);
  EXPECT_EQ(all.size(), 256u);
  for (const auto& l : all) EXPECT_EQ(to_json(code_from_json(Json::parse(l))).dump(), l);
  c.limit = BigInt(5);
  EXPECT_EQ(lines(invoke(c).out), std::vector<std::string>(all.begin(), all.begin() + 5));
}

TEST(Cli, EnumerateExtensionField) {
  CliConfig c = ambient("enumerate", 2, 1, 3, "[0,1]");
  c.m = 2;
  c.limit = BigInt(20);
  auto r = invoke(c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& l : lines(r.out)) EXPECT_EQ(to_json(code_from_json(Json::parse(l))).dump(), l);
}

TEST(Cli, DualOfDualIsIdentity) {
  auto c = ambient("enumerate", 5, 1, 4, "3");
  c.limit = BigInt(40);
  CliConfig d;
  d.command = "dual";
  for (const auto& l : lines(invoke(c).out)) {
    auto once = invoke(d, l);
    ASSERT_EQ(once.code, kExitOk) << once.err;
    Json dj = Json::parse(once.out);
    EXPECT_EQ(dj["params"]["lambda"], 2);
    BigInt prod = BigInt(Json::parse(l)["size"].get<std::string>()) * BigInt(dj["size"].get<std::string>());
    EXPECT_EQ(prod, big_pow(5, 40));
    auto twice = invoke(d, once.out);
    EXPECT_EQ(Json::parse(twice.out), Json::parse(l));
  }
}

TEST(Cli, SelfDualStreamIsSelfDual) {
  auto c = ambient("selfdual", 5, 1, 6, "-1");
  c.limit = BigInt(25);
  auto all = lines(invoke(c).out);
  EXPECT_EQ(all.size(), 25u);
  for (const auto& l : all) EXPECT_TRUE(is_self_dual(code_from_json(Json::parse(l))));
}

TEST(Cli, InfoDocument) {
  auto r = invoke(ambient("info", 5, 1, 6, "-1"));
  ASSERT_EQ(r.code, kExitOk);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["tau"], Json::parse("[3,4,1,2]"));
  EXPECT_EQ(j["delta"][0], 3);
  EXPECT_EQ(j["rho"], 0);
  EXPECT_EQ(j["total_count"], "62190883161");
  EXPECT_EQ(j["factors"][1]["poly"], Json::parse("[4,2,1]"));
  EXPECT_EQ(j["factors"][1]["count"], "2061");
  EXPECT_EQ(j["idempotents"][0], Json::parse("[1,0,0,0,0,2,0,0,0,0,4,0,0,0,0,3,0,0,0,0,1,0,0,0,0,2]"));
  EXPECT_EQ(Json::parse(invoke(ambient("idempotents", 5, 1, 6, "-1")).out), j["idempotents"]);
  EXPECT_FALSE(Json::parse(invoke(ambient("info", 5, 1, 4, "3")).out).contains("tau"));
}

TEST(Cli, Deterministic) {
  auto c = ambient("enumerate", 7, 1, 6, "3");
  c.limit = BigInt(200);
  EXPECT_EQ(invoke(c).out, invoke(c).out);
  auto seeded = c;
  seeded.seed = 42;
  EXPECT_EQ(invoke(seeded).out, invoke(c).out);
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "ccring_cli_test.txt";
  auto c = ambient("count", 5, 1, 6, "-1");
  c.output = path.string();
  auto r = invoke(c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(text, "62190883161\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace ccring
