/*
   Copyright 2026 the zprconv authors

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

#ifndef ZPRCONV_IO_HPP
#define ZPRCONV_IO_HPP

#include <string>

#include "zprconv/matrix.hpp"
#include "zprconv/report.hpp"

namespace zprconv {

/*
 * zprconv-1 code files:
 *   { "format": "zprconv-1", "p": 2, "r": 2, "n": 2,
 *     "generator": [ [[1,1],[0,1]], [[0],[2]] ] }
 * generator is rows × columns × ascending coefficient lists. Integers must
 * already lie in [0, p^r); out-of-range values are rejected, not reduced.
 * Parse failures throw ParseError with a message naming the offending field.
 */

PolyMatrix parse_code_text(const std::string& text);
PolyMatrix read_code_file(const std::string& path);
std::string code_file_text(const PolyMatrix& generator);
void write_code_file(const std::string& path, const PolyMatrix& generator);

std::string report_json_text(const VerificationReport& rep);

}  // namespace zprconv

#endif
