/*
   Copyright 2026 the grslib authors

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

#ifndef GRS_IO_HPP
#define GRS_IO_HPP

#include <iosfwd>

#include "grs/code.hpp"

namespace grs {

/**
 * Code description file: `key = value` lines, `#` comments. Keys:
 * p, m (default 1), modulus (low-to-high, required when m > 1), n, k,
 * alphas, vprimes (space-separated lists of n elements; vprimes defaults
 * to all ones).
 */
struct CodeConfig {
    uint32_t p = 0, m = 1;
    std::vector<uint32_t> modulus;
    size_t n = 0, k = 0;
    std::vector<uint32_t> alphas, vprimes;
};

CodeConfig parse_config(std::istream& in);
CodeConfig load_config(const std::string& path);
GrsCode make_code(const CodeConfig& cfg);

/// Word file: header line `q n`, then one line of n decimal symbols.
struct WordFile {
    uint32_t q = 0;
    std::vector<uint32_t> symbols;
};

WordFile parse_word(std::istream& in);
WordFile load_word(const std::string& path);
void write_word(std::ostream& out, uint32_t q, const std::vector<uint32_t>& symbols);
void save_word(const std::string& path, uint32_t q, const std::vector<uint32_t>& symbols);

}  // namespace grs

#endif
