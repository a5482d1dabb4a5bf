#include "cornerlab/ensembles.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "cornerlab/rng.hpp"

namespace cornerlab {

namespace {

// Per-ensemble salt so two samplers sharing a seed do not share draws.
std::uint64_t salted(std::uint64_t seed, std::string_view tag) {
  return mix64(seed ^ fnv1a64(tag));
}

}  // namespace

MatrixPrefix gaussian_hermitian(double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_hermitian: sigma must be >= 0");
  CounterStream cs(salted(seed, "gaussian_hermitian"));
  return MatrixPrefix::from_rule(MatrixKind::hermitian, [cs, sigma](std::size_t i, std::size_t j) {
    const std::uint64_t c = canonical_entry_index(i, j);
    if (i == j) return Complex(sigma * cs.normal(c), 0.0);
    return sigma * cs.complex_normal(c);
  });
}

MatrixPrefix gaussian_complex(double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_complex: sigma must be >= 0");
  CounterStream cs(salted(seed, "gaussian_complex"));
  return MatrixPrefix::from_rule(MatrixKind::complex, [cs, sigma](std::size_t i, std::size_t j) {
    return sigma * cs.complex_normal(canonical_entry_index(i, j));
  });
}

MatrixPrefix rank_one(double x, std::uint64_t seed) {
  CounterStream cs(salted(seed, "rank_one"));
  return MatrixPrefix::from_rule(MatrixKind::hermitian, [cs, x](std::size_t i, std::size_t j) {
    return x * cs.complex_normal(i) * std::conj(cs.complex_normal(j));
  });
}

MatrixPrefix deterministic_diag(std::function<double(std::size_t)> rule) {
  if (!rule) throw std::invalid_argument("deterministic_diag: null rule");
  return MatrixPrefix::from_rule(MatrixKind::hermitian,
                                 [rule = std::move(rule)](std::size_t i, std::size_t j) {
                                   return i == j ? Complex(rule(i), 0.0) : Complex(0.0, 0.0);
                                 });
}

MatrixPrefix constant_diag(double c) {
  return deterministic_diag([c](std::size_t) { return c; });
}

MatrixPrefix linear_diag() {
  return deterministic_diag([](std::size_t i) { return static_cast<double>(i + 1); });
}

MatrixPrefix alternating_diag() {
  return deterministic_diag([](std::size_t i) { return i % 2 == 0 ? -1.0 : 1.0; });
}

MatrixPrefix sum(const MatrixPrefix& a, const MatrixPrefix& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("sum: prefix kinds must match");
  return MatrixPrefix::from_rule(a.kind(), [a, b](std::size_t i, std::size_t j) {
    return a.entry(i, j) + b.entry(i, j);
  });
}

namespace {

double param_or(const nlohmann::json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_number()) throw std::invalid_argument(std::string("ensemble parameter '") + key + "' must be a number");
  return params.at(key).get<double>();
}

}  // namespace

MatrixPrefix EnsembleDescriptor::make_with_seed(std::uint64_t seed_override) const {
  if (name == "gaussian_hermitian") return gaussian_hermitian(param_or(params, "sigma", 1.0), seed_override);
  if (name == "gaussian_complex") return gaussian_complex(param_or(params, "sigma", 1.0), seed_override);
  if (name == "rank_one") return rank_one(param_or(params, "x", 1.0), seed_override);
  if (name == "deterministic_diag") {
    const std::string rule = params.contains("rule") ? params.at("rule").get<std::string>() : "constant";
    if (rule == "constant") return constant_diag(param_or(params, "value", 0.0));
    if (rule == "linear") return linear_diag();
    if (rule == "alternating") return alternating_diag();
    throw std::invalid_argument("deterministic_diag: unknown rule '" + rule + "'");
  }
  if (name == "sum") {
    if (!params.contains("terms") || !params.at("terms").is_array() || params.at("terms").size() < 2)
      throw std::invalid_argument("sum ensemble requires a 'terms' array of >= 2 descriptors");
    const auto& terms = params.at("terms");
    MatrixPrefix acc = EnsembleDescriptor::from_json(terms.at(0))
                           .make_with_seed(mix64(seed_override ^ mix64(0)));
    for (std::size_t k = 1; k < terms.size(); ++k)
      acc = sum(acc, EnsembleDescriptor::from_json(terms.at(k))
                         .make_with_seed(mix64(seed_override ^ mix64(k))));
    return acc;
  }
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

MatrixKind EnsembleDescriptor::kind() const {
  if (name == "gaussian_complex") return MatrixKind::complex;
  if (name == "sum") {
    if (params.contains("terms") && params.at("terms").is_array() && !params.at("terms").empty())
      return EnsembleDescriptor::from_json(params.at("terms").at(0)).kind();
  }
  if (name == "gaussian_hermitian" || name == "rank_one" || name == "deterministic_diag" ||
      name == "sum")
    return MatrixKind::hermitian;
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

std::string EnsembleDescriptor::label() const {
  std::string out = name;
  if (!params.empty()) out += params.dump();
  out += "#" + std::to_string(seed);
  return out;
}

EnsembleDescriptor EnsembleDescriptor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.at("name").is_string())
    throw std::invalid_argument("ensemble descriptor requires a 'name' string");
  EnsembleDescriptor d;
  d.name = j.at("name").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw std::invalid_argument("ensemble 'params' must be an object");
    d.params = j.at("params");
  }
  if (j.contains("seed")) d.seed = j.at("seed").get<std::uint64_t>();
  d.kind();  // validates the name (and nested terms)
  return d;
}

nlohmann::json EnsembleDescriptor::to_json() const {
  return nlohmann::json{{"name", name}, {"params", params}, {"seed", seed}};
}

}  // namespace cornerlab
