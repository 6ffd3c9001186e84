#pragma once

// Real matrix representation of Cl(p,q) built from the multiplication table
// of an (optionally generator-restricted) extended basis.
//
// For basis blades b_0 = 1, b_1, ..., b_{k-1} (blade order) the table holds
// b_i b_j = m_ij b_{i xor j}. The coefficient matrix A_s picks the signed
// entries of the table whose blade is b_s; the representation matrix is
// E_s = G A_s with G = diag(b_i b_i). A multivector maps to sum a_s E_s.
// Row vectors of coefficients multiply on the right, so x E_s holds the
// coefficients of x b_s and the first row of pi(A) reads back A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "clifford/blades.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

class ExtendedBasis {
 public:
  static constexpr int kDefaultMaxGenerators = 14;

  /// Basis over the generators in `generator_mask`. Throws std::invalid_argument
  /// for an empty set, generators outside the signature, or more than
  /// `max_generators` generators.
  ExtendedBasis(Signature sig, std::uint32_t generator_mask, int max_generators = kDefaultMaxGenerators);
  ExtendedBasis(Signature sig, const std::vector<int>& generators, int max_generators = kDefaultMaxGenerators);

  static ExtendedBasis full(Signature sig, int max_generators = kDefaultMaxGenerators) {
    return ExtendedBasis(sig, sig.full_mask(), max_generators);
  }

  const Signature& signature() const noexcept { return sig_; }
  std::uint32_t generator_mask() const noexcept { return mask_; }
  std::vector<int> generators() const { return Blade{mask_}.indices(); }
  std::size_t size() const noexcept { return blades_.size(); }
  const std::vector<Blade>& blades() const noexcept { return blades_; }
  Blade operator[](std::size_t i) const { return blades_[i]; }

  bool contains(Blade b) const noexcept { return (b.bits & ~mask_) == 0; }
  /// Position of `b` in the basis; b must satisfy contains(b).
  std::size_t ordinal(Blade b) const { return ordinal_[compress(b.bits)]; }

 private:
  std::size_t compress(std::uint32_t bits) const noexcept;

  Signature sig_;
  std::uint32_t mask_;
  std::vector<Blade> blades_;
  std::vector<std::size_t> ordinal_;  // indexed by blade bits packed onto the generator slots
};

struct TableEntry {
  int sign;
  std::size_t ordinal;  // ordinal of the product blade
};

class MulTable {
 public:
  explicit MulTable(ExtendedBasis basis);

  const ExtendedBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const TableEntry& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
  BladeProduct product(std::size_t i, std::size_t j) const {
    const auto& e = at(i, j);
    return {e.sign, basis_[e.ordinal]};
  }

 private:
  ExtendedBasis basis_;
  std::vector<TableEntry> entries_;
};

/// Diagonal of G: square sign of every basis blade.
std::vector<int> metric_diagonal(const ExtendedBasis& basis);

template <Scalar S>
class RepMatrix {
 public:
  explicit RepMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, S(0)) {}

  static RepMatrix identity(std::size_t dim) {
    RepMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  S trace() const {
    S t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const auto& x : data_)
      if (!ScalarTraits<S>::is_zero(x)) ++count;
    return count;
  }

  /// Exactly one nonzero entry in every row and every column.
  bool is_sparse_permutation() const {
    std::vector<int> rows(dim_, 0), cols(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!ScalarTraits<S>::is_zero((*this)(i, j))) {
          ++rows[i];
          ++cols[j];
        }
    for (std::size_t k = 0; k < dim_; ++k)
      if (rows[k] != 1 || cols[k] != 1) return false;
    return true;
  }

  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const S& aik = a(i, k);
        if (ScalarTraits<S>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < a.dim_; ++j)
          if (!ScalarTraits<S>::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend RepMatrix operator*(const S& s, RepMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<S> data_;
};

/// A_s: signed 0/1 entries of the table whose product blade is basis[s].
template <Scalar S>
RepMatrix<S> coeff_matrix(const MulTable& table, std::size_t s) {
  const auto& basis = table.basis();
  RepMatrix<S> a(table.dim());
  for (std::size_t i = 0; i < table.dim(); ++i) {
    // b_i b_j is proportional to b_s only for b_j = b_i xor b_s.
    const std::size_t j = basis.ordinal(Blade{basis[i].bits ^ basis[s].bits});
    a(i, j) = scalar_from_int<S>(table.at(i, j).sign);
  }
  return a;
}

/// E_s = G A_s.
template <Scalar S>
RepMatrix<S> rep_matrix(const MulTable& table, std::size_t s) {
  const auto g = metric_diagonal(table.basis());
  RepMatrix<S> e = coeff_matrix<S>(table, s);
  for (std::size_t i = 0; i < e.dim(); ++i)
    if (g[i] < 0)
      for (std::size_t j = 0; j < e.dim(); ++j) e(i, j) = -e(i, j);
  return e;
}

/// Sum of a_s E_s over the terms of `a`. Throws std::invalid_argument when
/// span(a) is not covered by the table's generators.
template <Scalar S>
RepMatrix<S> pi(const Multivector<S>& a, const MulTable& table) {
  const auto& basis = table.basis();
  if (!(a.signature() == basis.signature())) throw SignatureMismatch();
  const auto g = metric_diagonal(basis);
  RepMatrix<S> out(table.dim());
  for (const auto& term : a.terms()) {
    if (!basis.contains(term.blade))
      throw std::invalid_argument("blade " + to_string(term.blade) + " is not covered by the basis generators");
    const std::size_t s = basis.ordinal(term.blade);
    for (std::size_t i = 0; i < table.dim(); ++i) {
      const std::size_t j = basis.ordinal(Blade{basis[i].bits ^ basis[s].bits});
      if (g[i] * table.at(i, j).sign > 0)
        out(i, j) += term.coeff;
      else
        out(i, j) -= term.coeff;
    }
  }
  return out;
}

template <Scalar S>
RepMatrix<S> pi(const Multivector<S>& a, const ExtendedBasis& basis) {
  return pi(a, MulTable(basis));
}

/// Reads the multivector back from the first row.
template <Scalar S>
Multivector<S> pi_inverse(const RepMatrix<S>& m, const ExtendedBasis& basis) {
  Multivector<S> out(basis.signature());
  for (std::size_t j = 0; j < m.dim() && j < basis.size(); ++j) out.set(basis[j], m(0, j));
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination for exact scalars and
/// scaled partial pivoting for binary64.
template <Scalar S>
S bareiss_det(RepMatrix<S> m);

/// v I - m.
template <Scalar S>
RepMatrix<S> shifted_negation(const RepMatrix<S>& m, const S& v) {
  RepMatrix<S> out = scalar_from_int<S>(-1) * m;
  for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) += v;
  return out;
}

template <>
Rational bareiss_det(RepMatrix<Rational> m);
template <>
double bareiss_det(RepMatrix<double> m);

}  // namespace clifford
