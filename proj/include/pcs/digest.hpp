/* Copyright 2026 The pcsengine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PCS_DIGEST_HPP_
#define PCS_DIGEST_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace pcs {

// FNV-1a, 64 bit. Content digests for cache keys, scripted-backend lookup
// and audit logs. Not cryptographic.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static const char* kDigits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
    v >>= 4;
  }
  return out;
}

inline std::string digest_hex(std::string_view data) { return to_hex(fnv1a64(data)); }

// Digest of multiple parts; length-prefixed so ("ab","c") != ("a","bc").
inline std::string digest_hex(std::initializer_list<std::string_view> parts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto part : parts) {
    std::uint64_t len = part.size();
    for (int i = 0; i < 8; ++i) {
      char b = static_cast<char>((len >> (8 * i)) & 0xFF);
      h = fnv1a64(std::string_view(&b, 1), h);
    }
    h = fnv1a64(part, h);
  }
  return to_hex(h);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed seed-derivation rule for parallel/sweep cells:
// seed_cell = hash(seed, a, b, ...).
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(root ^ 0x5851f42d4c957f2dULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

}  // namespace pcs

#endif  // PCS_DIGEST_HPP_
