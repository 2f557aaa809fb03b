#include "qipm/rng.hpp"

namespace qipm {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view stream,
                          std::uint64_t index, std::uint64_t sub) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ fnv1a(stream));
  h = splitmix64(h ^ index);
  h = splitmix64(h ^ (sub + 0x5851f42d4c957f2dULL));
  return h;
}

}  // namespace qipm
