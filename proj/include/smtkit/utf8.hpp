// utf8.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace smtkit::utf8 {

// Strict decoder: rejects overlong forms, surrogates, values past U+10FFFF
// and truncated sequences. Throws DecodeError with the byte offset.
std::vector<char32_t> decode(std::string_view s);

std::string encode(const std::vector<char32_t>& cps);
void append(std::string& out, char32_t cp);

// Number of Unicode scalar values; validates on the way.
std::size_t scalar_length(std::string_view s);

bool is_whitespace(char32_t cp);

}  // namespace smtkit::utf8
