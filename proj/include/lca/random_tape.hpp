#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "lca/graph.hpp"

namespace lca {

// Context labels shared by every module that reads the tape.
inline constexpr std::string_view kEdgeColorLabel = "ecolor";
inline constexpr std::string_view kVertexColorLabel = "vcolor";
inline constexpr std::string_view kSampleLabel = "sample";
inline constexpr std::string_view kPercolateLabel = "percolate";

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Shared random string realized as a keyed hash of (seed, label, args).
///
/// Stateless: the same (seed, domain, label, args) yields the same word in
/// any process and in any query order. The optional domain string salts every
/// derivation; it exists so tests can build a deliberately mismatched tape.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed, std::string_view domain = {});

  std::uint64_t seed() const { return seed_; }

  std::uint64_t uniform_word(std::string_view label, std::span<const std::uint64_t> args) const;
  std::uint64_t uniform_word(std::string_view label, std::initializer_list<std::uint64_t> args) const {
    return uniform_word(label, std::span<const std::uint64_t>(args.begin(), args.size()));
  }

  /// Uniform in [0, bound) by rejection over trial-indexed sub-draws.
  std::uint64_t uniform_below(std::string_view label, std::span<const std::uint64_t> args, std::uint64_t bound) const;
  std::uint64_t uniform_below(std::string_view label, std::initializer_list<std::uint64_t> args,
                              std::uint64_t bound) const {
    return uniform_below(label, std::span<const std::uint64_t>(args.begin(), args.size()), bound);
  }

  /// Bernoulli(p) from the top 53 bits of one word.
  bool coin(std::string_view label, std::initializer_list<std::uint64_t> args, double p) const;

  /// Color of a vertex pair (edge or not) in [0, palette).
  std::uint32_t edge_color(EdgeKey pair, std::uint32_t palette, std::string_view label = kEdgeColorLabel) const;

  /// trial-th with-replacement draw in [0, bound) tied to an edge.
  std::uint64_t sample_index(EdgeKey context, std::uint64_t trial, std::uint64_t bound) const;

 private:
  std::uint64_t absorb_label(std::string_view label) const;

  std::uint64_t seed_;
  std::uint64_t key_;
};

/// Sequential draws from one labeled stream of a tape; used by generators.
class TapeStream {
 public:
  TapeStream(const RandomTape& tape, std::string label, std::uint64_t stream = 0)
      : tape_(&tape), label_(std::move(label)), stream_(stream) {}

  std::uint64_t next() { return tape_->uniform_word(label_, {stream_, counter_++}); }
  std::uint64_t below(std::uint64_t bound) { return tape_->uniform_below(label_, {stream_, counter_++}, bound); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates; every permutation equally likely up to hash quality.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  const RandomTape* tape_;
  std::string label_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace lca
