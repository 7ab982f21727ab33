// Copyright 2026 The adjprobe Authors.
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

#ifndef ADJPROBE_FORMAT_H_
#define ADJPROBE_FORMAT_H_

#include <charconv>
#include <string>

namespace adjprobe {

// Fixed-point rendering with '.' as the decimal separator regardless of the
// process locale.
inline std::string FormatFixed(double value, int decimals) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, decimals);
  return std::string(buffer, result.ptr);
}

}  // namespace adjprobe

#endif  // ADJPROBE_FORMAT_H_
