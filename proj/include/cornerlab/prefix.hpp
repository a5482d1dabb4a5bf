#pragma once

// Points of the infinite matrix spaces: all-complex matrices and their
// Hermitian subspace. A MatrixPrefix realizes entries lazily, border by
// border, and memoizes them, so reads are idempotent and a corner of any
// size can be requested at any time. All indices are 0-based.

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>

#include <Eigen/Dense>

namespace cornerlab {

using Complex = std::complex<double>;

enum class MatrixKind { hermitian, complex };

// Dense realization of the top-left n-by-n block of a prefix. When the
// hermitian flag is set the entries are conjugate-symmetric exactly: the
// lower half is copied from the upper half, never recomputed.
struct CornerMatrix {
  Eigen::MatrixXcd entries;
  bool hermitian = false;

  std::size_t n() const { return static_cast<std::size_t>(entries.rows()); }
};

// Canonical border-major layout: corner n occupies slots [0, n^2); the
// entries added by growing corner b to b+1 are ordered
// (0,b), ..., (b-1,b), (b,0), ..., (b,b).
// The same index doubles as the per-entry counter for seeded sources.
constexpr std::size_t canonical_entry_index(std::size_t i, std::size_t j) noexcept {
  const std::size_t b = i > j ? i : j;
  return (j == b && i < b) ? b * b + i : b * b + b + j;
}

// Index permutation induced by the block-swap unitary with block size m:
// swaps [0, m) with [m, 2m) and fixes everything past 2m. An involution.
constexpr std::size_t check_u_permutation(std::size_t i, std::size_t m) noexcept {
  if (i < m) return i + m;
  if (i < 2 * m) return i - m;
  return i;
}

class MatrixPrefix {
 public:
  // Entry generator; must be pure in (i, j). For hermitian prefixes it is
  // consulted only for i <= j; the lower half is mirrored and the diagonal
  // is forced real, so the hermitian invariant holds by construction.
  using EntryFn = std::function<Complex(std::size_t, std::size_t)>;

  static MatrixPrefix zero(MatrixKind kind);
  static MatrixPrefix from_rule(MatrixKind kind, EntryFn rule);
  // Finite block extended by zeros.
  static MatrixPrefix from_array(MatrixKind kind, const Eigen::MatrixXcd& block);

  MatrixKind kind() const noexcept;
  Complex entry(std::size_t i, std::size_t j) const;
  std::size_t materialized_bound() const;

  // Realizes all entries with max(i, j) < n.
  void materialize(std::size_t n) const;

 private:
  struct Cell;
  explicit MatrixPrefix(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}
  std::shared_ptr<Cell> cell_;

  friend CornerMatrix corner(const MatrixPrefix& p, std::size_t n);
  friend double frobenius_window(const MatrixPrefix& p, std::size_t n);
};

// Top-left n-by-n block, n >= 1.
CornerMatrix corner(const MatrixPrefix& p, std::size_t n);

// Drops the first m rows and columns: entry(i, j) = p.entry(m+i, m+j).
MatrixPrefix tail(const MatrixPrefix& p, std::size_t m);

// Conjugation by the block-swap unitary: entry(i, j) = p.entry(pi(i), pi(j))
// with pi = check_u_permutation(., m), m >= 1. Since the unitary is real,
// symmetric and involutive, the same entry permutation realizes both the
// Hermitian conjugation action and the two-sided action on complex matrices.
MatrixPrefix conjugate_check_u(const MatrixPrefix& p, std::size_t m);

// Sum over the n-by-n window of squared entry moduli, n >= 1.
double frobenius_window(const MatrixPrefix& p, std::size_t n);

// Embeds a finite corner with zero extension (the finite unitary group
// sits inside the infinite one the same way, with identity tail).
MatrixPrefix as_prefix(const CornerMatrix& c);

}  // namespace cornerlab
