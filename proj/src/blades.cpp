#include "clifford/blades.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifford {

Signature::Signature(int p, int q, int r) : p_(p), q_(q), negative_mask_(0) {
  if (r != 0) throw std::invalid_argument("degenerate algebras (r > 0) are not supported");
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (p + q < 1) throw std::invalid_argument("signature needs at least one generator");
  if (p + q > kMaxGenerators)
    throw std::invalid_argument("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  for (int i = p + 1; i <= p + q; ++i) negative_mask_ |= Blade::generator(i).bits;
}

Blade Blade::from_indices(std::span<const int> indices) {
  Blade b;
  int previous = 0;
  for (int index : indices) {
    if (index <= previous || index > Signature::kMaxGenerators)
      throw std::invalid_argument("blade indices must be strictly ascending and in range");
    b.bits |= generator(index).bits;
    previous = index;
  }
  return b;
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(grade()));
  for (std::uint32_t x = bits; x != 0; x &= x - 1) out.push_back(std::countr_zero(x) + 1);
  return out;
}

std::string to_string(Blade b) {
  if (b.is_unit()) return "1";
  const auto idx = b.indices();
  std::string out = "e";
  if (idx.back() <= 9) {
    for (int i : idx) out += static_cast<char>('0' + i);
    return out;
  }
  out += '[';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k]);
  }
  out += ']';
  return out;
}

std::vector<Blade> blades_over(std::uint32_t mask) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << std::popcount(mask));
  // Enumerate all submasks of `mask`.
  std::uint32_t sub = 0;
  do {
    out.push_back(Blade{sub});
    sub = (sub - mask) & mask;
  } while (sub != 0);
  std::sort(out.begin(), out.end(), BladeLess{});
  return out;
}

}  // namespace clifford
