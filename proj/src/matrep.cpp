#include "clifford/matrep.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace clifford {

ExtendedBasis::ExtendedBasis(Signature sig, std::uint32_t generator_mask, int max_generators)
    : sig_(sig), mask_(generator_mask) {
  if (mask_ == 0) throw std::invalid_argument("extended basis needs at least one generator");
  if ((mask_ & ~sig.full_mask()) != 0) throw std::invalid_argument("generator outside the signature");
  if (std::popcount(mask_) > max_generators)
    throw std::invalid_argument("basis over " + std::to_string(std::popcount(mask_)) +
                                " generators exceeds the representation cap of " + std::to_string(max_generators));
  blades_ = blades_over(mask_);
  ordinal_.assign(blades_.size(), 0);
  for (std::size_t k = 0; k < blades_.size(); ++k) ordinal_[compress(blades_[k].bits)] = k;
}

ExtendedBasis::ExtendedBasis(Signature sig, const std::vector<int>& generators, int max_generators)
    : ExtendedBasis(sig,
                    [&] {
                      std::uint32_t mask = 0;
                      for (int g : generators) {
                        if (g < 1 || g > sig.n()) throw std::invalid_argument("generator index out of range");
                        mask |= Blade::generator(g).bits;
                      }
                      return mask;
                    }(),
                    max_generators) {}

std::size_t ExtendedBasis::compress(std::uint32_t bits) const noexcept {
  std::size_t out = 0;
  std::size_t slot = 0;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1, ++slot)
    if (bits & (m & (~m + 1u))) out |= std::size_t{1} << slot;
  return out;
}

MulTable::MulTable(ExtendedBasis basis) : basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  entries_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = blade_mul(basis_.signature(), basis_[i], basis_[j]);
      entries_[i * k + j] = TableEntry{p.sign, basis_.ordinal(p.blade)};
    }
}

std::vector<int> metric_diagonal(const ExtendedBasis& basis) {
  std::vector<int> g;
  g.reserve(basis.size());
  for (Blade b : basis.blades()) g.push_back(blade_square(basis.signature(), b));
  return g;
}

template <>
Rational bareiss_det(RepMatrix<Rational> m) {
  const std::size_t n = m.dim();
  if (n == 0) return Rational(1);
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    const Rational& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  Rational det = m(n - 1, n - 1);
  return sign < 0 ? Rational(-det) : det;
}

template <>
double bareiss_det(RepMatrix<double> m) {
  const std::size_t n = m.dim();
  std::vector<double> scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale[i] = std::max(scale[i], std::fabs(m(i, j)));
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    double best_ratio = -1.0;
    for (std::size_t i = k; i < n; ++i) {
      const double ratio = scale[i] > 0.0 ? std::fabs(m(i, k)) / scale[i] : 0.0;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
      std::swap(scale[k], scale[best]);
      det = -det;
    }
    double row_max = 0.0;
    for (std::size_t j = k; j < n; ++j) row_max = std::max(row_max, std::fabs(m(k, j)));
    const double pivot = m(k, k);
    if (row_max == 0.0 || std::fabs(pivot) < 1e-12 * row_max) return 0.0;
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace clifford
