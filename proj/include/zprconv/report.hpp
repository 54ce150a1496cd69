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

#ifndef ZPRCONV_REPORT_HPP
#define ZPRCONV_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace zprconv {

struct CheckItem {
    std::string name;
    bool pass = false;
    bool applicable = true;  // e.g. free-code identities on a non-free code
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    uint64_t seed = 0;
    std::vector<CheckItem> items;

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(),
                           [](const CheckItem& c) { return c.pass || !c.applicable; });
    }
};

}  // namespace zprconv

#endif
