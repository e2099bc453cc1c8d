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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace infodiagram {

using Mask = std::uint32_t;

// Default cap on the number of generators; INFODIAGRAM_MAX_N overrides it.
inline constexpr int kDefaultMaxGenerators = 12;
// Hard ceiling for the override (tables are 2^n wide).
inline constexpr int kHardMaxGenerators = 24;

// Current generator cap, honoring INFODIAGRAM_MAX_N.
int max_generators();

// Throws DomainError unless 1 <= n <= max_generators().
void check_generator_count(int n);

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int cardinality(Mask m) { return std::popcount(m); }

// Element of the free commutative idempotent monoid on n generators: the
// joint of the generators whose bits are set. The empty mask is the neutral
// element and the product is the union.
struct MonoidElement {
  Mask bits = 0;

  constexpr MonoidElement() = default;
  constexpr explicit MonoidElement(Mask b) : bits(b) {}

  static MonoidElement generator(int index) { return MonoidElement(Mask{1} << index); }
  static MonoidElement all(int n) { return MonoidElement(full_mask(n)); }

  constexpr bool is_neutral() const { return bits == 0; }
  constexpr bool contains(int index) const { return (bits >> index) & 1u; }

  friend constexpr MonoidElement operator*(MonoidElement a, MonoidElement b) {
    return MonoidElement(a.bits | b.bits);
  }
  friend constexpr bool operator==(MonoidElement, MonoidElement) = default;
  friend constexpr auto operator<=>(MonoidElement, MonoidElement) = default;
};

// Nonempty subset I of [n] naming the atom p_I.
class AtomId {
 public:
  explicit AtomId(Mask subset);
  Mask subset() const { return subset_; }
  int size() const { return cardinality(subset_); }
  friend bool operator==(AtomId, AtomId) = default;
  friend auto operator<=>(AtomId, AtomId) = default;

 private:
  Mask subset_;
};

// 1-based sorted index list, the form used in documents ({1,3} for 0b101).
std::vector<int> to_index_list(Mask m);
Mask from_index_list(const std::vector<int>& indices, int n);
// "{1,3}"; "{}" for the empty mask.
std::string format_subset(Mask m);

}  // namespace infodiagram
