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

#ifndef CCRING_JSON_IO_HPP_
#define CCRING_JSON_IO_HPP_

#include <cstdint>

#include "json.hpp"

#include "ccring/dual.hpp"

namespace ccring {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElem& a);
// Accepts an int (m = 1) or an array of m ints. -1 maps to p - 1.
FieldElem field_elem_from_json(const FieldCtx& field, const Json& j);

Json to_json(const Poly& a);
Poly poly_from_json(const FieldCtx& field, const Json& j);

Json to_json(const FieldCtx& field);
FieldCtx::Ptr field_from_json(const Json& j);

Json to_json(const AmbientParams& params);
AmbientParams params_from_json(const Json& j);

Json to_json(const IdealSpec& spec);
IdealSpec ideal_from_json(const ChainCtx& ring, const Json& j);

Json to_json(const CodeSpec& code);
CodeSpec code_from_json(const Json& j, std::uint64_t seed = default_seed());
// Components are decoded against fd's factors.
CodeSpec code_from_json(FactorData::Ptr fd, const Json& j);

// Written in the canonical factor order of the dual ambient ring.
Json to_json(const DualCodeSpec& dual, std::uint64_t seed = default_seed());

Json info_json(const FactorData& fd);
Json idempotents_json(const FactorData& fd);

}  // namespace ccring

#endif  // CCRING_JSON_IO_HPP_
