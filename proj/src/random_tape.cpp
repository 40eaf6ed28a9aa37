#include "lca/random_tape.hpp"

#include <limits>

#include "lca/errors.hpp"

namespace lca {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kLengthSalt = 0xD6E8FEB86659FD93ull;

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Argument i is whitened before it meets the running state, so equal values
// at different positions contribute differently.
constexpr std::uint64_t absorb(std::uint64_t state, std::uint64_t arg, std::size_t position) {
  return mix64(state ^ mix64(arg + kGolden * (position + 1)));
}

constexpr std::uint64_t finish(std::uint64_t state, std::size_t length) {
  return mix64(state ^ (kLengthSalt * (length + 1)));
}

}  // namespace

RandomTape::RandomTape(std::uint64_t seed, std::string_view domain)
    : seed_(seed), key_(mix64(mix64(seed + kGolden) ^ fnv1a(domain))) {}

std::uint64_t RandomTape::absorb_label(std::string_view label) const { return mix64(key_ ^ mix64(fnv1a(label))); }

std::uint64_t RandomTape::uniform_word(std::string_view label, std::span<const std::uint64_t> args) const {
  std::uint64_t state = absorb_label(label);
  for (std::size_t i = 0; i < args.size(); ++i) state = absorb(state, args[i], i);
  return finish(state, args.size());
}

std::uint64_t RandomTape::uniform_below(std::string_view label, std::span<const std::uint64_t> args,
                                        std::uint64_t bound) const {
  if (bound == 0) throw CallerError("uniform_below: bound must be >= 1");
  if (bound == 1) return 0;
  std::uint64_t state = absorb_label(label);
  for (std::size_t i = 0; i < args.size(); ++i) state = absorb(state, args[i], i);
  // Largest multiple of bound that fits; words at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t word = finish(absorb(state, attempt, args.size()), args.size() + 1);
    if (word < limit) return word % bound;
  }
}

bool RandomTape::coin(std::string_view label, std::initializer_list<std::uint64_t> args, double p) const {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double u = static_cast<double>(uniform_word(label, args) >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint32_t RandomTape::edge_color(EdgeKey pair, std::uint32_t palette, std::string_view label) const {
  if (palette == 0) throw CallerError("edge_color: palette must be >= 1");
  return static_cast<std::uint32_t>(uniform_below(label, {pair.u, pair.v}, palette));
}

std::uint64_t RandomTape::sample_index(EdgeKey context, std::uint64_t trial, std::uint64_t bound) const {
  if (bound == 0) throw CallerError("sample_index: bound must be >= 1");
  return uniform_below(kSampleLabel, {context.u, context.v, trial}, bound);
}

}  // namespace lca
