#include "cornerlab/prefix.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cornerlab {

struct MatrixPrefix::Cell {
  MatrixKind kind;
  EntryFn generate;
  mutable std::mutex mu;
  mutable std::vector<Complex> cache;  // canonical border-major layout
  mutable std::size_t bound = 0;       // realized dimension

  Cell(MatrixKind k, EntryFn g) : kind(k), generate(std::move(g)) {}

  // Requires mu held. Fills borders bound..n-1 in canonical order; entries
  // are produced once and never recomputed.
  void ensure(std::size_t n) const {
    if (bound >= n) return;
    cache.resize(n * n);
    for (std::size_t b = bound; b < n; ++b) {
      if (kind == MatrixKind::hermitian) {
        for (std::size_t i = 0; i < b; ++i)
          cache[canonical_entry_index(i, b)] = generate(i, b);
        for (std::size_t j = 0; j < b; ++j)
          cache[canonical_entry_index(b, j)] = std::conj(cache[canonical_entry_index(j, b)]);
        cache[canonical_entry_index(b, b)] = Complex(generate(b, b).real(), 0.0);
      } else {
        for (std::size_t i = 0; i < b; ++i)
          cache[canonical_entry_index(i, b)] = generate(i, b);
        for (std::size_t j = 0; j <= b; ++j)
          cache[canonical_entry_index(b, j)] = generate(b, j);
      }
    }
    bound = n;
  }
};

MatrixPrefix MatrixPrefix::zero(MatrixKind kind) {
  return from_rule(kind, [](std::size_t, std::size_t) { return Complex(0.0, 0.0); });
}

MatrixPrefix MatrixPrefix::from_rule(MatrixKind kind, EntryFn rule) {
  if (!rule) throw std::invalid_argument("MatrixPrefix: null entry rule");
  return MatrixPrefix(std::make_shared<Cell>(kind, std::move(rule)));
}

MatrixPrefix MatrixPrefix::from_array(MatrixKind kind, const Eigen::MatrixXcd& block) {
  if (block.rows() != block.cols()) throw std::invalid_argument("MatrixPrefix: block must be square");
  auto copy = std::make_shared<Eigen::MatrixXcd>(block);
  const auto k = static_cast<std::size_t>(copy->rows());
  return from_rule(kind, [copy, k](std::size_t i, std::size_t j) {
    return (i < k && j < k) ? (*copy)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                            : Complex(0.0, 0.0);
  });
}

MatrixKind MatrixPrefix::kind() const noexcept { return cell_->kind; }

Complex MatrixPrefix::entry(std::size_t i, std::size_t j) const {
  const std::size_t need = (i > j ? i : j) + 1;
  std::lock_guard lock(cell_->mu);
  cell_->ensure(need);
  return cell_->cache[canonical_entry_index(i, j)];
}

std::size_t MatrixPrefix::materialized_bound() const {
  std::lock_guard lock(cell_->mu);
  return cell_->bound;
}

void MatrixPrefix::materialize(std::size_t n) const {
  std::lock_guard lock(cell_->mu);
  cell_->ensure(n);
}

CornerMatrix corner(const MatrixPrefix& p, std::size_t n) {
  if (n < 1) throw std::invalid_argument("corner: dimension must be >= 1");
  std::lock_guard lock(p.cell_->mu);
  p.cell_->ensure(n);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          p.cell_->cache[canonical_entry_index(i, j)];
  return CornerMatrix{std::move(m), p.cell_->kind == MatrixKind::hermitian};
}

MatrixPrefix tail(const MatrixPrefix& p, std::size_t m) {
  if (m == 0) return p;
  return MatrixPrefix::from_rule(p.kind(), [p, m](std::size_t i, std::size_t j) {
    return p.entry(m + i, m + j);
  });
}

MatrixPrefix conjugate_check_u(const MatrixPrefix& p, std::size_t m) {
  if (m < 1) throw std::invalid_argument("conjugate_check_u: block size must be >= 1");
  return MatrixPrefix::from_rule(p.kind(), [p, m](std::size_t i, std::size_t j) {
    return p.entry(check_u_permutation(i, m), check_u_permutation(j, m));
  });
}

double frobenius_window(const MatrixPrefix& p, std::size_t n) {
  if (n < 1) throw std::invalid_argument("frobenius_window: dimension must be >= 1");
  std::lock_guard lock(p.cell_->mu);
  p.cell_->ensure(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sum += std::norm(p.cell_->cache[canonical_entry_index(i, j)]);
  return sum;
}

MatrixPrefix as_prefix(const CornerMatrix& c) {
  return MatrixPrefix::from_array(c.hermitian ? MatrixKind::hermitian : MatrixKind::complex,
                                  c.entries);
}

}  // namespace cornerlab
