#pragma once

// Seeded constructors for matrix prefixes whose scaled corner statistics
// have limits forced by the law of large numbers. Every sampler is a pure
// function of (parameters, seed); entries come from a counter-based stream
// keyed by the canonical entry index, so materialization order is
// irrelevant.

#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "cornerlab/prefix.hpp"

namespace cornerlab {

// Hermitian prefix with independent entries: real N(0, sigma^2) on the
// diagonal, complex with E|h_ij|^2 = sigma^2 off it (real and imaginary
// parts of variance sigma^2/2 each).
MatrixPrefix gaussian_hermitian(double sigma, std::uint64_t seed);

// All-complex prefix, every entry an independent complex Gaussian with
// E|z_ij|^2 = sigma^2.
MatrixPrefix gaussian_complex(double sigma, std::uint64_t seed);

// h = x * v v^* with v_i independent standard complex Gaussians
// (E|v_i|^2 = 1). Every corner has rank <= 1 and tr h(n)^2 = (tr h(n))^2.
MatrixPrefix rank_one(double x, std::uint64_t seed);

// Hermitian diagonal prefix diag(rule(0), rule(1), ...).
MatrixPrefix deterministic_diag(std::function<double(std::size_t)> rule);

// Named diagonal rules used in configs and tests.
MatrixPrefix constant_diag(double c);
MatrixPrefix linear_diag();       // entry i holds i + 1
MatrixPrefix alternating_diag();  // entry i holds -1 for even i, +1 for odd

// Entrywise sum; kinds must match.
MatrixPrefix sum(const MatrixPrefix& a, const MatrixPrefix& b);

// Config-facing descriptor: {name, params, seed}. Names match the sampler
// functions above; deterministic_diag takes a "rule" parameter, and "sum"
// takes a "terms" array of nested descriptors.
struct EnsembleDescriptor {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;

  MatrixPrefix make() const { return make_with_seed(seed); }
  MatrixPrefix make_with_seed(std::uint64_t seed_override) const;
  MatrixKind kind() const;
  std::string label() const;  // canonical one-line form for tables

  static EnsembleDescriptor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

}  // namespace cornerlab
