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

#include "ccring/json_io.hpp"

#include <string>

#include "ccring/error.hpp"

namespace ccring {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint32_t digit(const FieldCtx& field, const Json& j) {
  std::int64_t v = as_int(j, "coefficient");
  if (v < 0 || v >= static_cast<std::int64_t>(field.p())) parse_fail("coefficient out of range: " + j.dump());
  return static_cast<std::uint32_t>(v);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const FieldElem& a) {
  if (a.field().m() == 1) return a.packed();
  Json out = Json::array();
  for (auto c : a.coeffs()) out.push_back(c);
  return out;
}

FieldElem field_elem_from_json(const FieldCtx& field, const Json& j) {
  if (j.is_number_integer() && j.get<std::int64_t>() == -1) return -field.one();
  if (field.m() == 1) {
    if (j.is_array() && j.size() == 1) return field.from_int(digit(field, j[0]));
    return field.from_int(digit(field, j));
  }
  if (!j.is_array() || j.size() != field.m()) parse_fail("expected an array of " + std::to_string(field.m()) + " integers");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) c.push_back(digit(field, x));
  return field.from_coeffs(c);
}

Json to_json(const Poly& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(to_json(a.coeff(i)));
  return out;
}

Poly poly_from_json(const FieldCtx& field, const Json& j) {
  if (!j.is_array()) parse_fail("polynomial must be an array");
  std::vector<FieldElem> c;
  for (const auto& x : j) {
    if (x.is_number_integer() && x.get<std::int64_t>() == -1) parse_fail("negative coefficient");
    c.push_back(field_elem_from_json(field, x));
  }
  if (!c.empty() && c.back().is_zero()) parse_fail("polynomial has a trailing zero");
  return Poly(field, c);
}

Json to_json(const FieldCtx& field) {
  return Json{{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

FieldCtx::Ptr field_from_json(const Json& j) {
  auto p = as_int(member(j, "p"), "p");
  auto m = as_int(member(j, "m"), "m");
  if (p < 2 || p > 0xFFFF || m < 1 || m > 32) parse_fail("p or m out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    modulus.emplace();
    for (const auto& x : j.at("modulus")) modulus->push_back(static_cast<std::uint32_t>(as_int(x, "modulus coefficient")));
  }
  return FieldCtx::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus);
}

Json to_json(const AmbientParams& params) {
  const FieldCtx& f = *params.field;
  return Json{{"p", f.p()},
              {"m", f.m()},
              {"s", params.s},
              {"n", params.n},
              {"lambda", to_json(params.lambda)},
              {"modulus", f.modulus()}};
}

AmbientParams params_from_json(const Json& j) {
  auto field = field_from_json(j);
  auto s = as_int(member(j, "s"), "s");
  auto n = as_int(member(j, "n"), "n");
  if (s < 0 || n < 1) parse_fail("s or n out of range");
  return AmbientParams::make(field, static_cast<unsigned>(s), static_cast<std::uint64_t>(n),
                             field_elem_from_json(*field, member(j, "lambda")));
}

Json to_json(const IdealSpec& spec) {
  Json out{{"case", kind_name(spec.kind)}};
  switch (spec.kind) {
    case IdealKind::kI:
      out["b"] = to_json(spec.b.value());
      break;
    case IdealKind::kII:
      out["k"] = spec.k;
      out["b"] = to_json(spec.b.value());
      break;
    case IdealKind::kIII:
      out["k"] = spec.k;
      break;
    case IdealKind::kIV:
      out["t"] = spec.t;
      out["b"] = to_json(spec.b.value());
      break;
    case IdealKind::kV:
      out["k"] = spec.k;
      out["t"] = spec.t;
      out["b"] = to_json(spec.b.value());
      break;
  }
  return out;
}

IdealSpec ideal_from_json(const ChainCtx& ring, const Json& j) {
  const Json& c = member(j, "case");
  if (!c.is_string()) parse_fail("case must be a string");
  IdealSpec spec;
  try {
    spec.kind = parse_kind(c.get<std::string>());
  } catch (const Error&) {
    parse_fail("unknown case " + c.dump());
  }
  auto small = [&](const char* key) {
    auto v = as_int(member(j, key), key);
    if (v < 0 || v > static_cast<std::int64_t>(ring.e())) parse_fail(std::string(key) + " out of range");
    return static_cast<unsigned>(v);
  };
  if (spec.kind == IdealKind::kII || spec.kind == IdealKind::kIII || spec.kind == IdealKind::kV) spec.k = small("k");
  if (spec.kind == IdealKind::kIV || spec.kind == IdealKind::kV) spec.t = small("t");
  Poly b = j.contains("b") ? poly_from_json(ring.field(), j.at("b")) : Poly(ring.field());
  spec.b = ring.elem(b);
  if (spec.b.value() != b) parse_fail("b is not reduced");
  validate(spec);
  return spec;
}

Json to_json(const CodeSpec& code) {
  Json comps = Json::array();
  for (const auto& c : code.components) comps.push_back(to_json(c));
  Json factors = Json::array();
  for (const auto& info : code.fd->factors()) factors.push_back(to_json(info.f));
  return Json{{"params", to_json(code.params())},
              {"factors", factors},
              {"components", comps},
              {"size", code_size(code).str()}};
}

CodeSpec code_from_json(const Json& j, std::uint64_t seed) {
  return code_from_json(FactorData::build(params_from_json(member(j, "params")), seed), j);
}

CodeSpec code_from_json(FactorData::Ptr fd, const Json& j) {
  const Json& comps = member(j, "components");
  if (!comps.is_array() || comps.size() != fd->size())
    parse_fail("expected " + std::to_string(fd->size()) + " components");
  if (j.contains("factors")) {
    const Json& fs = j.at("factors");
    if (!fs.is_array() || fs.size() != fd->size()) parse_fail("factor list does not match the ambient ring");
    for (std::size_t i = 0; i < fd->size(); ++i)
      if (poly_from_json(*fd->params().field, fs[i]) != fd->factor(i).f)
        parse_fail("factor " + std::to_string(i + 1) + " does not match the ambient ring");
  }
  CodeSpec code{fd, {}};
  for (std::size_t i = 0; i < fd->size(); ++i) code.components.push_back(ideal_from_json(*fd->factor(i).chain, comps[i]));
  if (j.contains("size") && j.at("size") != code_size(code).str()) parse_fail("size does not match the components");
  return code;
}

Json to_json(const DualCodeSpec& dual, std::uint64_t seed) {
  return to_json(as_code_spec(dual, FactorData::build(dual.params, seed)));
}

Json info_json(const FactorData& fd) {
  Json factors = Json::array();
  BigInt total = 1;
  for (const auto& info : fd.factors()) {
    BigInt c = count_ideals(*info.chain);
    total *= c;
    factors.push_back(Json{{"poly", to_json(info.f)}, {"degree", info.degree}, {"count", c.str()}});
  }
  Json out{{"params", to_json(fd.params())}, {"lambda0", to_json(fd.lambda0())}, {"factors", factors}};
  out["idempotents"] = idempotents_json(fd);
  if (fd.has_pairing()) {
    Json tau = Json::array(), delta = Json::array();
    for (auto t : fd.tau()) tau.push_back(t + 1);
    for (const auto& d : fd.delta()) delta.push_back(to_json(d));
    out["tau"] = tau;
    out["delta"] = delta;
    out["rho"] = fd.fixed_count();
    out["paired"] = fd.paired_count();
  }
  out["total_count"] = total.str();
  return out;
}

Json idempotents_json(const FactorData& fd) {
  Json out = Json::array();
  for (const auto& info : fd.factors()) out.push_back(to_json(info.idempotent));
  return out;
}

}  // namespace ccring
