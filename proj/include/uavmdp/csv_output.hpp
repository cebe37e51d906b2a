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

#ifndef UAVMDP_CSV_OUTPUT_HPP_
#define UAVMDP_CSV_OUTPUT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace uavmdp {

// Shortest decimal that round-trips to the same double, '.' separator,
// locale independent. Integral values below 2^53 print without an exponent.
// Infinities print as "inf" / "-inf".
std::string format_number(double value);

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Comment lines written before the CSV header row of every output file.
struct CsvProvenance {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

void write_provenance(std::ostream& out, const CsvProvenance& provenance);

}  // namespace uavmdp

#endif  // UAVMDP_CSV_OUTPUT_HPP_
