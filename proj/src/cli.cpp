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

#include "ccring/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ccring/error.hpp"
#include "ccring/json_io.hpp"
#include "ccring/oracle.hpp"

namespace ccring {

namespace {

Json parse_literal(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Error(ErrorCode::kParseError, std::string("bad ") + what + " literal: " + text);
  }
}

AmbientParams params_of(const CliConfig& c, const std::string& default_lambda) {
  if (c.p == 0) throw Error(ErrorCode::kParseError, "--p is required");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (c.modulus) {
    Json j = parse_literal(*c.modulus, "modulus");
    if (!j.is_array()) throw Error(ErrorCode::kParseError, "--modulus must be an array");
    modulus.emplace();
    for (const auto& x : j) {
      if (!x.is_number_unsigned()) throw Error(ErrorCode::kParseError, "--modulus entries must be non-negative");
      modulus->push_back(x.get<std::uint32_t>());
    }
  }
  auto field = FieldCtx::make(c.p, c.m, modulus);
  if (!c.lambda && default_lambda.empty()) throw Error(ErrorCode::kParseError, "--lambda is required");
  FieldElem lambda = field_elem_from_json(*field, parse_literal(c.lambda.value_or(default_lambda), "lambda"));
  return AmbientParams::make(field, c.s, c.n, lambda);
}

std::uint64_t seed_of(const CliConfig& c) { return c.seed.value_or(default_seed()); }

int self_paired_nu(const AmbientParams& params) {
  if (params.lambda.is_one()) return 1;
  if (params.lambda == -params.field->one()) return -1;
  throw Error(ErrorCode::kNotSelfPairedLambda, "self-dual codes need lambda = 1 or lambda = -1");
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_verify(const CliConfig& c, std::ostream& out) {
  SuiteLevel level;
  if (c.level == "quick") {
    level = SuiteLevel::kQuick;
  } else if (c.level == "full") {
    level = SuiteLevel::kFull;
  } else {
    throw Error(ErrorCode::kParseError, "--level must be quick or full");
  }
  bool all = true;
  for (const auto& r : run_oracle_suite(level)) {
    all = all && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds
        << "s  " << r.name << "  " << r.detail << '\n';
  }
  out << (all ? "all checks passed" : "some checks failed") << '\n';
  return all ? kExitOk : kExitOracle;
}

int dispatch(const CliConfig& c, std::istream& in, std::ostream& out) {
  const std::string& cmd = c.command;
  if (cmd == "verify") return run_verify(c, out);
  if (cmd == "dual") {
    std::string text;
    if (c.input && *c.input != "-") {
      std::ifstream f(*c.input);
      if (!f) throw Error(ErrorCode::kParseError, "cannot open " + *c.input);
      text = read_all(f);
    } else {
      text = read_all(in);
    }
    CodeSpec code = code_from_json(parse_literal(text, "code"), seed_of(c));
    out << to_json(dual_code(code), seed_of(c)).dump() << '\n';
    return kExitOk;
  }

  auto params = params_of(c, cmd == "selfdual" ? "-1" : "");
  auto fd = FactorData::build(params, seed_of(c));
  if (cmd == "info") {
    out << info_json(*fd).dump(2) << '\n';
  } else if (cmd == "idempotents") {
    out << idempotents_json(*fd).dump() << '\n';
  } else if (cmd == "count") {
    out << count_codes(*fd).str() << '\n';
  } else if (cmd == "enumerate") {
    CodeStream stream(fd, c.limit);
    while (auto code = stream.next()) out << to_json(*code).dump() << '\n';
  } else if (cmd == "selfdual") {
    int nu = self_paired_nu(params);
    if (c.count_only) {
      out << count_self_dual(*fd, nu).str() << '\n';
    } else {
      SelfDualStream stream(fd, nu, c.limit);
      while (auto code = stream.next()) out << to_json(*code).dump() << '\n';
    }
  } else {
    throw Error(ErrorCode::kParseError, "unknown command " + cmd);
  }
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.output && *config.output != "-") {
      std::ofstream file(*config.output);
      if (!file) throw Error(ErrorCode::kParseError, "cannot write " + *config.output);
      return dispatch(config, in, file);
    }
    return dispatch(config, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitValidation;
  }
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Constacyclic codes over F_q + uF_q"};
  app.require_subcommand(1, 1);
  CliConfig c;
  std::string limit;

  auto ambient = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "characteristic")->required();
    sub->add_option("--m", c.m, "extension degree")->default_val(1);
    sub->add_option("--s", c.s, "length is n p^s")->default_val(1);
    sub->add_option("--n", c.n, "length is n p^s")->required();
    sub->add_option("--lambda", c.lambda, "unit as a field literal: 3, -1, [1,2]");
    sub->add_option("--modulus", c.modulus, "field modulus, little-endian: [2,1,1]");
    sub->add_option("--seed", c.seed, "factorization seed");
  };
  auto common = [&](CLI::App* sub) { sub->add_option("--output,-o", c.output, "write here instead of stdout"); };

  auto* info = app.add_subcommand("info", "factors, idempotents and pairing as JSON");
  auto* idem = app.add_subcommand("idempotents", "primitive idempotents as JSON");
  auto* count = app.add_subcommand("count", "number of codes");
  auto* enumerate = app.add_subcommand("enumerate", "all codes as NDJSON");
  auto* dual = app.add_subcommand("dual", "dual of a code read as JSON");
  auto* selfdual = app.add_subcommand("selfdual", "self-dual codes");
  auto* verify = app.add_subcommand("verify", "run the brute-force checks");
  for (auto* sub : {info, idem, count, enumerate, selfdual}) ambient(sub);
  for (auto* sub : {info, idem, count, enumerate, dual, selfdual, verify}) common(sub);
  for (auto* sub : {enumerate, selfdual}) sub->add_option("--limit", limit, "stop after this many codes");
  selfdual->add_flag("--count-only", c.count_only, "print only the number of self-dual codes");
  dual->add_option("--input,-i", c.input, "code JSON file, - for stdin");
  dual->add_option("--seed", c.seed, "factorization seed");
  verify->add_option("--level", c.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (!limit.empty()) {
    try {
      c.limit = BigInt(limit);
    } catch (const std::exception&) {
      std::cerr << "error: --limit must be a non-negative integer\n";
      return kExitValidation;
    }
    if (*c.limit < 0) {
      std::cerr << "error: --limit must be a non-negative integer\n";
      return kExitValidation;
    }
  }
  return run(c, std::cin, std::cout, std::cerr);
}

}  // namespace ccring
