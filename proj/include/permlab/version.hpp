#ifndef PERMLAB_VERSION_HPP_
#define PERMLAB_VERSION_HPP_

#include <cstdint>
#include <string>

namespace permlab {

inline constexpr char kVersion[] = "0.1.0";

// FNV-1a over the bytes, for input digests in reports.
inline uint64_t fnv1a(std::string const& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t value);

}  // namespace permlab

#endif  // PERMLAB_VERSION_HPP_
