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
#include <string>
#include <vector>

#include "infodiagram/setfun.hpp"

namespace infodiagram {

using Bytes = std::vector<std::uint8_t>;

// Bytes in, bytes out. Implementations must be deterministic and safe to
// call concurrently.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual Bytes compress(std::span<const std::uint8_t> input) const = 0;
  // Identity recorded in output metadata, e.g. "zlib 1.2.11 level 9".
  virtual std::string name() const = 0;
};

class ZlibCompressor final : public Compressor {
 public:
  explicit ZlibCompressor(int level = 9);
  Bytes compress(std::span<const std::uint8_t> input) const override;
  std::string name() const override;

 private:
  int level_;
};

// Blobs at the indices in `subset`, ascending, each prefixed by its length
// as a little-endian uint64, concatenated.
Bytes canonical_encoding(std::span<const Bytes> blobs, Mask subset);

// R(S) = compressed length in bytes of canonical_encoding(blobs, S).
// R(0) is the length of the compressed empty encoding; r1_instance subtracts it.
SetFunction compressor_setfunction(std::span<const Bytes> blobs, const Compressor& compressor);

}  // namespace infodiagram
