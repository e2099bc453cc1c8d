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

#include <cstdint>
#include <span>
#include <vector>

#include "infodiagram/monoid.hpp"

namespace infodiagram {

// A set of atoms of the n-variable diagram, stored as a bitset over the
// 2^n - 1 atoms. Atom p_I lives at bit I - 1.
class RegionMask {
 public:
  RegionMask() = default;
  explicit RegionMask(int n);

  int generators() const { return n_; }
  std::size_t atom_count() const { return (std::size_t{1} << n_) - 1; }

  bool contains(Mask atom) const;
  void insert(Mask atom);
  void erase(Mask atom);
  bool empty() const;
  std::size_t size() const;

  // Member atom subsets in ascending mask order.
  std::vector<Mask> members() const;

  RegionMask& operator|=(const RegionMask& other);
  RegionMask& operator&=(const RegionMask& other);
  RegionMask& operator-=(const RegionMask& other);
  friend RegionMask operator|(RegionMask a, const RegionMask& b) { return a |= b; }
  friend RegionMask operator&(RegionMask a, const RegionMask& b) { return a &= b; }
  friend RegionMask operator-(RegionMask a, const RegionMask& b) { return a -= b; }
  friend bool operator==(const RegionMask&, const RegionMask&) = default;

 private:
  void check_compatible(const RegionMask& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// All 2^n - 1 atoms in ascending mask order.
std::vector<AtomId> atoms(int n);

// The circle X~_I: atoms p_J with J meeting I. Empty for I = 1.
RegionMask circle_region(MonoidElement element, int n);

// Atoms p_I with I meeting every L_k and missing J, i.e. the intersection
// of the circles of L_1..L_q minus the circle of J. Requires q >= 1.
RegionMask hu_region(std::span<const MonoidElement> intersected, MonoidElement excluded,
                     int n);

// Membership rule behind hu_region, usable without materializing a region.
inline bool in_hu_region(Mask atom, std::span<const MonoidElement> intersected,
                         MonoidElement excluded) {
  if (atom & excluded.bits) return false;
  for (auto l : intersected) {
    if ((atom & l.bits) == 0) return false;
  }
  return true;
}

}  // namespace infodiagram
