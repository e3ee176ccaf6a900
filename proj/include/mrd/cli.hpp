/*
   Copyright 2026 The mrdcodes Authors

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

#ifndef MRD_CLI_HPP
#define MRD_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mrd::cli {

inline constexpr int kExitMrd = 0;
inline constexpr int kExitNotMrd = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitError = 3;

inline constexpr const char* kDefaultCatalog = "mrd_catalog.jsonl";

struct RunConfig {
    std::string command;
    std::uint64_t q = 0;
    std::optional<std::uint32_t> e;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> T;
    std::uint32_t s = 1;
    std::size_t k = 0;
    std::string family;
    /// Inline JSON or a path to a JSON file.
    std::string code;
    std::string poly;
    std::string A;
    std::string side = "both";
    std::uint64_t budget = 0;
    unsigned workers = 0;
    std::string out;
    std::string catalog;
};

/// --catalog, then $MRD_CATALOG, then mrd_catalog.jsonl in the working directory.
std::filesystem::path catalog_path(const RunConfig& cfg);

/// Runs one command; JSON goes to out, diagnostics to err. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv with a subcommand per operation and dispatches to run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mrd::cli

#endif  // MRD_CLI_HPP
