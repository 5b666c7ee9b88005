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

#ifndef CCRING_CLI_HPP_
#define CCRING_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ccring/gf.hpp"

namespace ccring {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitOracle = 3;

struct CliConfig {
  std::string command;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  unsigned s = 1;
  std::uint64_t n = 1;
  // Field element literal as JSON text, e.g. "4", "-1" or "[1,2]".
  std::optional<std::string> lambda;
  // Field modulus as JSON text, e.g. "[2,1,1]".
  std::optional<std::string> modulus;
  std::optional<std::uint64_t> seed;
  std::optional<BigInt> limit;
  std::optional<std::string> input;
  std::optional<std::string> output;
  bool count_only = false;
  std::string level = "quick";
};

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to run().
int cli_main(int argc, char** argv);

}  // namespace ccring

#endif  // CCRING_CLI_HPP_
