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

#include "infodiagram/compressor.hpp"

#include <zlib.h>

#include <cstdint>
#include <stdexcept>

#include "infodiagram/errors.hpp"

namespace infodiagram {

ZlibCompressor::ZlibCompressor(int level) : level_(level) {
  if (level < 0 || level > 9) throw DomainError("zlib level must be in [0, 9]");
}

Bytes ZlibCompressor::compress(std::span<const std::uint8_t> input) const {
  uLongf size = compressBound(static_cast<uLong>(input.size()));
  Bytes out(size);
  const int rc = compress2(out.data(), &size, input.data(), static_cast<uLong>(input.size()), level_);
  if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed with code " + std::to_string(rc));
  out.resize(size);
  return out;
}

std::string ZlibCompressor::name() const {
  return std::string("zlib ") + zlibVersion() + " level " + std::to_string(level_);
}

Bytes canonical_encoding(std::span<const Bytes> blobs, Mask subset) {
  Bytes out;
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    if (((subset >> i) & 1u) == 0) continue;
    std::uint64_t length = blobs[i].size();
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(length >> (8 * b)));
    out.insert(out.end(), blobs[i].begin(), blobs[i].end());
  }
  return out;
}

SetFunction compressor_setfunction(std::span<const Bytes> blobs, const Compressor& compressor) {
  if (blobs.empty()) throw DomainError("compressor set function needs at least one blob");
  const int n = static_cast<int>(blobs.size());
  check_generator_count(n);
  const std::int64_t limit = std::int64_t{1} << n;
  std::vector<double> values(static_cast<std::size_t>(limit));
  std::vector<std::string> errors(static_cast<std::size_t>(limit));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < limit; ++s) {
    try {
      const Bytes encoded = canonical_encoding(blobs, static_cast<Mask>(s));
      values[s] = static_cast<double>(compressor.compress(encoded).size());
    } catch (const std::exception& e) {
      errors[s] = e.what();
    }
  }
  for (std::int64_t s = 0; s < limit; ++s) {
    if (!errors[s].empty()) {
      throw std::runtime_error("compressor failed on subset " +
                               format_subset(static_cast<Mask>(s)) + ": " + errors[s]);
    }
  }
  return SetFunction(n, std::move(values));
}

}  // namespace infodiagram
