#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qipm {

using Engine = std::mt19937_64;

/// Derives a named substream seed. Equal inputs give equal seeds on every
/// platform; distinct names or indices give decorrelated seeds.
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream,
                          std::uint64_t index = 0, std::uint64_t sub = 0);

inline Engine make_engine(std::uint64_t base, std::string_view stream,
                          std::uint64_t index = 0, std::uint64_t sub = 0) {
  return Engine(derive_seed(base, stream, index, sub));
}

}  // namespace qipm
