// Copyright 2026 The uavmdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uavmdp/csv_output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace uavmdp {

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::array<char, 64> buf{};
  const bool integral = value == std::trunc(value) && std::abs(value) < 9.007199254740992e15;
  auto [end, ec] =
      integral ? std::to_chars(buf.data(), buf.data() + buf.size(), value,
                               std::chars_format::fixed)
               : std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf.data(), 16);
}

void write_provenance(std::ostream& out, const CsvProvenance& provenance) {
  out << "# config_digest=" << provenance.config_digest
      << " seed=" << provenance.seed << '\n';
  for (const auto& note : provenance.notes) out << "# " << note << '\n';
}

}  // namespace uavmdp
