/*
Copyright 2026 The lodgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace lodgraph {

/// XXH64 of `data` with the given seed.
std::uint64_t xxh64(std::span<const std::byte> data, std::uint64_t seed) noexcept;
std::uint64_t xxh64(std::string_view data, std::uint64_t seed) noexcept;

/// 64-bit digest of one RDF term. Rendered as exactly 16 lowercase hex chars.
struct TermHash {
  std::uint64_t value = 0;

  std::string hex() const;
  static std::optional<TermHash> parse(std::string_view hex) noexcept;

  friend constexpr bool operator==(TermHash, TermHash) = default;
  friend constexpr auto operator<=>(TermHash, TermHash) = default;
};

/// Writes the 16-char rendering of `value` into `out` (no terminator).
void write_hex(std::uint64_t value, char* out) noexcept;

struct HashConfig {
  std::string algorithm = "xxh64";
  std::uint64_t seed = 0;
};

/// Hashes the N-Triples surface form of a term (`<iri>`, `_:label`,
/// `"lexical"@lang`, `"lexical"^^<datatype>`).
class TermHasher {
 public:
  explicit TermHasher(HashConfig config = {});
  TermHash operator()(std::string_view surface) const noexcept {
    return TermHash{xxh64(surface, config_.seed)};
  }
  const HashConfig& config() const noexcept { return config_; }

 private:
  HashConfig config_;
};

}  // namespace lodgraph

template <>
struct std::hash<lodgraph::TermHash> {
  std::size_t operator()(lodgraph::TermHash h) const noexcept {
    return static_cast<std::size_t>(h.value);
  }
};
