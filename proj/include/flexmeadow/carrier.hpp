#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

namespace flexmeadow {

/// splitmix64. Hand-rolled so that sampling is bit-identical across
/// platforms and standard libraries; the standard <random> distributions are
/// implementation-defined and would break reproducible reports.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n). n must be positive; the modulo bias is
  /// irrelevant at the tiny ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform-ish draw in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

/// Deterministic per-sample stream: every (seed, index, slot) triple names
/// its own generator state, so samples can be drawn independently and in any
/// order while staying reproducible.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index,
                                std::uint64_t slot) {
  SplitMix64 g(seed);
  std::uint64_t a = g.next();
  SplitMix64 h(a ^ (index + 0x9E3779B97F4A7C15ULL));
  std::uint64_t b = h.next();
  SplitMix64 k(b ^ (slot + 0xBF58476D1CE4E5B9ULL));
  return k.next();
}

/// Bounds for the random value generators.
struct GenConfig {
  int exp_numerator_bound = 3;   // exponents n/d with |n| <= this
  int exp_denominator_max = 3;   // and 1 <= d <= this
  int coeff_bound = 10;          // coefficient numerator/denominator bound
  int special_percent = 10;      // share of samples forced to special values
  int rat_bound = 100;           // numerator/denominator bound for plain rationals
};

/// A model of the meadow signature {0, 1, +, *, -, ^-1, N}: constants and
/// total operations plus an equivalence `eq`, a printer/parser for its value
/// literals, and a deterministic sampler. Optional capabilities (detected
/// separately): an absorbing error element `err`, and `enumerate` for finite
/// carriers.
template <class M>
concept meadow_carrier = requires(const M& m, const typename M::value_type& v,
                                  std::uint64_t u, const std::string& s) {
  typename M::value_type;
  { m.name() } -> std::convertible_to<std::string>;
  { m.zero() } -> std::same_as<typename M::value_type>;
  { m.one() } -> std::same_as<typename M::value_type>;
  { m.add(v, v) } -> std::same_as<typename M::value_type>;
  { m.mul(v, v) } -> std::same_as<typename M::value_type>;
  { m.neg(v) } -> std::same_as<typename M::value_type>;
  { m.inv(v) } -> std::same_as<typename M::value_type>;
  { m.nfun(v) } -> std::same_as<typename M::value_type>;
  { m.eq(v, v) } -> std::convertible_to<bool>;
  { m.print(v) } -> std::convertible_to<std::string>;
  { m.parse(s) } -> std::same_as<typename M::value_type>;
  { m.sample(u, u, u) } -> std::same_as<typename M::value_type>;
};

/// The model exposes a distinguished absorbing error element.
template <class M>
concept has_err = meadow_carrier<M> && requires(const M& m) {
  { m.err() } -> std::same_as<typename M::value_type>;
};

/// The model's carrier is finite and can be listed exhaustively.
template <class M>
concept has_enumerate = meadow_carrier<M> && requires(const M& m) {
  { m.enumerate() } -> std::same_as<std::vector<typename M::value_type>>;
};

}  // namespace flexmeadow
