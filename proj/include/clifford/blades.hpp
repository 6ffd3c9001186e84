#pragma once

// Canonical basis blades of a non-degenerate Clifford algebra Cl(p,q).
//
// A blade is stored as a bitmask over generator slots: bit (i-1) set means
// generator e_i participates. Blades are ordered grade first, then
// lexicographically on their ascending index lists:
//   1 < e1 < ... < en < e12 < e13 < ... < e(n-1)n < e123 < ...

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace clifford {

class Signature {
 public:
  static constexpr int kMaxGenerators = 30;

  /// Throws std::invalid_argument for negative counts, n = 0, n above
  /// kMaxGenerators, or any degenerate dimension r != 0.
  Signature(int p, int q, int r = 0);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }

  /// Square of generator e_i (1-based): +1 for i <= p, -1 otherwise.
  int metric(int index) const noexcept { return index <= p_ ? 1 : -1; }

  /// Bits of the generators that square to -1.
  std::uint32_t negative_mask() const noexcept { return negative_mask_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n()) - 1u; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
  std::uint32_t negative_mask_;
};

struct Blade {
  std::uint32_t bits = 0;

  static constexpr Blade unit() noexcept { return Blade{0}; }
  static constexpr Blade generator(int index) noexcept { return Blade{std::uint32_t{1} << (index - 1)}; }

  /// Builds a blade from a strictly ascending list of 1-based indices.
  /// Throws std::invalid_argument otherwise.
  static Blade from_indices(std::span<const int> indices);

  int grade() const noexcept { return std::popcount(bits); }
  bool is_unit() const noexcept { return bits == 0; }
  bool valid_for(const Signature& sig) const noexcept { return (bits & ~sig.full_mask()) == 0; }
  std::vector<int> indices() const;

  friend bool operator==(Blade, Blade) = default;
};

/// Grade-then-lexicographic comparison.
inline std::strong_ordering blade_cmp(Blade a, Blade b) noexcept {
  if (a.bits == b.bits) return std::strong_ordering::equal;
  const int ga = a.grade();
  const int gb = b.grade();
  if (ga != gb) return ga <=> gb;
  // Both lists agree below the lowest differing generator; whichever holds it is smaller.
  const std::uint32_t diff = a.bits ^ b.bits;
  return (a.bits & (diff & (~diff + 1u))) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

struct BladeLess {
  bool operator()(Blade a, Blade b) const noexcept { return blade_cmp(a, b) < 0; }
};

struct BladeProduct {
  int sign;  // always +1 or -1
  Blade blade;

  friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// Number of transpositions needed to sort the concatenation a ++ b, modulo 2.
inline int reorder_parity(std::uint32_t a, std::uint32_t b) noexcept {
  int swaps = 0;
  for (std::uint32_t x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return swaps & 1;
}

inline BladeProduct blade_mul(const Signature& sig, Blade a, Blade b) noexcept {
  int parity = reorder_parity(a.bits, b.bits);
  parity ^= std::popcount(a.bits & b.bits & sig.negative_mask()) & 1;
  return {parity ? -1 : 1, Blade{a.bits ^ b.bits}};
}

/// Sign of blade * blade (always a scalar).
inline int blade_square(const Signature& sig, Blade a) noexcept { return blade_mul(sig, a, a).sign; }

/// Sign (-1)^(k(k-1)/2) picked up by a grade-k blade under reversion.
constexpr int reversion_sign(int grade) noexcept { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }

/// `1`, `e134`, or `e[3,10,12]` when some index exceeds 9.
std::string to_string(Blade b);

/// All 2^k blades over the generators in `mask`, sorted by blade_cmp.
std::vector<Blade> blades_over(std::uint32_t mask);

}  // namespace clifford
