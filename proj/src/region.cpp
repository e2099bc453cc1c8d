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

#include "infodiagram/region.hpp"

#include <bit>

#include "infodiagram/errors.hpp"

namespace infodiagram {

RegionMask::RegionMask(int n) : n_(n) {
  check_generator_count(n);
  words_.assign((atom_count() + 63) / 64, 0);
}

bool RegionMask::contains(Mask atom) const {
  if (atom == 0 || atom > atom_count()) return false;
  const std::size_t bit = atom - 1;
  return (words_[bit / 64] >> (bit % 64)) & 1u;
}

void RegionMask::insert(Mask atom) {
  if (atom == 0 || atom > atom_count()) throw DomainError("atom outside the diagram");
  const std::size_t bit = atom - 1;
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

void RegionMask::erase(Mask atom) {
  if (atom == 0 || atom > atom_count()) return;
  const std::size_t bit = atom - 1;
  words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
}

bool RegionMask::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t RegionMask::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<Mask> RegionMask::members() const {
  std::vector<Mask> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<Mask>(w * 64 + bit + 1));
      word &= word - 1;
    }
  }
  return out;
}

void RegionMask::check_compatible(const RegionMask& other) const {
  if (n_ != other.n_) throw DomainError("regions belong to diagrams of different size");
}

RegionMask& RegionMask::operator|=(const RegionMask& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

RegionMask& RegionMask::operator&=(const RegionMask& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

RegionMask& RegionMask::operator-=(const RegionMask& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<AtomId> atoms(int n) {
  check_generator_count(n);
  std::vector<AtomId> out;
  out.reserve(full_mask(n));
  for (Mask m = 1; m <= full_mask(n); ++m) out.emplace_back(m);
  return out;
}

RegionMask circle_region(MonoidElement element, int n) {
  RegionMask region(n);
  if ((element.bits & ~full_mask(n)) != 0) throw DomainError("element outside [n]");
  for (Mask m = 1; m <= full_mask(n); ++m) {
    if (m & element.bits) region.insert(m);
  }
  return region;
}

RegionMask hu_region(std::span<const MonoidElement> intersected, MonoidElement excluded, int n) {
  if (intersected.empty()) throw DomainError("hu_region requires q >= 1 intersected elements");
  RegionMask region(n);
  for (Mask m = 1; m <= full_mask(n); ++m) {
    if (in_hu_region(m, intersected, excluded)) region.insert(m);
  }
  return region;
}

}  // namespace infodiagram
