// Copyright 2026 The Infodiagram Authors.
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

#include "infodiagram/monoid.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <system_error>

#include "infodiagram/errors.hpp"

namespace infodiagram {

int max_generators() {
  const char* env = std::getenv("INFODIAGRAM_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxGenerators;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1 || value > kHardMaxGenerators) {
    throw DomainError("INFODIAGRAM_MAX_N must be an integer in [1, " +
                      std::to_string(kHardMaxGenerators) + "], got '" + env + "'");
  }
  return value;
}

void check_generator_count(int n) {
  const int cap = max_generators();
  if (n < 1 || n > cap) {
    throw DomainError("generator count " + std::to_string(n) + " outside [1, " +
                      std::to_string(cap) + "] (N_MAX = " + std::to_string(cap) + ")");
  }
}

AtomId::AtomId(Mask subset) : subset_(subset) {
  if (subset == 0) throw DomainError("atoms are indexed by nonempty subsets");
}

std::vector<int> to_index_list(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i + 1);
  }
  return out;
}

Mask from_index_list(const std::vector<int>& indices, int n) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw DomainError("index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    m |= Mask{1} << (i - 1);
  }
  return m;
}

std::string format_subset(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : to_index_list(m)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace infodiagram
