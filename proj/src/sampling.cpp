// Copyright 2026 The tchub Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tchub/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tchub/gates.hpp"

namespace tchub {

std::string bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if (index & (std::uint64_t{1} << q)) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

std::uint64_t parse_bitstring(const std::string& bits) {
  if (bits.size() > 63) throw std::invalid_argument("bitstring too long");
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') index |= std::uint64_t{1} << q;
    else if (bits[q] != '0') throw std::invalid_argument("bitstring may only contain 0 and 1: " + bits);
  }
  return index;
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> labels) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base);
  for (std::uint64_t l : labels) h = mix(h ^ mix(l));
  return h;
}

std::vector<std::int64_t> multinomial(const RVector& probabilities, std::int64_t shots, std::mt19937_64& rng) {
  if (shots <= 0) throw std::invalid_argument("shot count must be positive");
  std::vector<std::int64_t> out(static_cast<std::size_t>(probabilities.size()), 0);
  std::int64_t remaining = shots;
  double mass = probabilities.sum();
  for (Eigen::Index i = 0; i < probabilities.size() && remaining > 0; ++i) {
    const double p = probabilities[i];
    if (p <= 0) continue;
    const double q = (i + 1 == probabilities.size() || mass <= p) ? 1.0 : std::clamp(p / mass, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> draw(remaining, q);
    const std::int64_t k = draw(rng);
    out[static_cast<std::size_t>(i)] = k;
    remaining -= k;
    mass -= p;
  }
  if (remaining > 0)
    for (Eigen::Index i = probabilities.size() - 1; i >= 0; --i)
      if (probabilities[i] > 0) {
        out[static_cast<std::size_t>(i)] += remaining;
        break;
      }
  return out;
}

Counts sample(const StateVector& psi, std::int64_t shots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RVector p = psi.amplitudes().cwiseAbs2() / psi.amplitudes().squaredNorm();
  const std::vector<std::int64_t> k = multinomial(p, shots, rng);
  Counts counts;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] > 0) counts[bitstring(i, psi.n_qubits())] = k[i];
  return counts;
}

ReadoutModel::ReadoutModel(RMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0 || (m_.rows() & (m_.rows() - 1)) != 0)
    throw std::invalid_argument("readout matrix must be square with a power-of-two dimension");
  n_qubits_ = std::countr_zero(static_cast<std::uint64_t>(m_.rows()));
  if (m_.minCoeff() < 0 || m_.maxCoeff() > 1) throw std::invalid_argument("readout matrix entries must lie in [0, 1]");
  for (Eigen::Index j = 0; j < m_.cols(); ++j)
    if (std::abs(m_.col(j).sum() - 1.0) > 1e-12) throw std::invalid_argument("readout matrix columns must sum to one");
}

ReadoutModel ReadoutModel::identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return ReadoutModel(RMatrix::Identity(d, d));
}

ReadoutModel ReadoutModel::from_qubit_flips(const std::vector<std::pair<double, double>>& flips) {
  RMatrix m = RMatrix::Ones(1, 1);
  // Qubit q is bit q, so each new qubit becomes the most significant factor.
  for (const auto& [p10, p01] : flips) {
    RMatrix single(2, 2);
    single << 1 - p10, p01, p10, 1 - p01;
    RMatrix next(2 * m.rows(), 2 * m.cols());
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = single(a, b) * m;
    m = std::move(next);
  }
  return ReadoutModel(std::move(m));
}

ReadoutModel ReadoutModel::symmetric_flip(int n_qubits, double p) {
  return from_qubit_flips(std::vector<std::pair<double, double>>(static_cast<std::size_t>(n_qubits), {p, p}));
}

Counts apply_readout_error(const Counts& counts, const ReadoutModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Counts out;
  for (const auto& [bits, k] : counts) {
    if (static_cast<int>(bits.size()) != model.n_qubits()) throw std::invalid_argument("bitstring width differs from readout model");
    const auto j = static_cast<Eigen::Index>(parse_bitstring(bits));
    const std::vector<std::int64_t> read = multinomial(model.matrix().col(j), k, rng);
    for (std::size_t i = 0; i < read.size(); ++i)
      if (read[i] > 0) out[bitstring(i, model.n_qubits())] += read[i];
  }
  return out;
}

RVector project_to_simplex(const RVector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, shift = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) shift = t;
  }
  return (v.array() - shift).max(0.0).matrix();
}

namespace {

RVector frequencies(const Counts& counts, int n_qubits, std::int64_t& total) {
  RVector f = RVector::Zero(Eigen::Index{1} << n_qubits);
  total = 0;
  for (const auto& [bits, k] : counts) {
    if (static_cast<int>(bits.size()) != n_qubits) throw std::invalid_argument("bitstring width differs from readout model");
    f[static_cast<Eigen::Index>(parse_bitstring(bits))] += static_cast<double>(k);
    total += k;
  }
  if (total <= 0) throw std::invalid_argument("no shots recorded");
  return f / static_cast<double>(total);
}

RVector simplex_least_squares(const RMatrix& m, const RVector& f) {
  const RMatrix gram = m.transpose() * m;
  const RVector mtf = m.transpose() * f;
  const double lipschitz = Eigen::SelfAdjointEigenSolver<RMatrix>(gram, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  RVector x = project_to_simplex(m.colPivHouseholderQr().solve(f));
  RVector y = x;
  double t = 1.0;
  for (int it = 0; it < 100000; ++it) {
    const RVector next = project_to_simplex(y - (gram * y - mtf) / lipschitz);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / t_next) * (next - x);
    const double step = (next - x).lpNorm<Eigen::Infinity>();
    x = next;
    t = t_next;
    if (step < 1e-15) break;
  }
  return x;
}

}  // namespace

Distribution mitigate_readout(const Counts& counts, const ReadoutModel& model) {
  std::int64_t total = 0;
  const RVector f = frequencies(counts, model.n_qubits(), total);
  const RVector x = simplex_least_squares(model.matrix(), f);
  Distribution out;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] > 0) out[bitstring(static_cast<std::uint64_t>(i), model.n_qubits())] = x[i] * static_cast<double>(total);
  return out;
}

std::string to_json(const Counts& counts) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [bits, k] : counts) {
    os << (first ? "" : ", ") << '"' << bits << "\": " << k;
    first = false;
  }
  os << '}';
  return os.str();
}

Estimate estimate_string(const StateVector& psi, const PauliString& s, std::int64_t shots, std::uint64_t seed,
                         const ReadoutModel* readout) {
  const int n = psi.n_qubits();
  if (s.is_identity()) return {1.0, 0.0};
  CVector v = psi.amplitudes();
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (!(s.x & bit)) continue;
    if (s.z & bit) apply_gate(Gate::phase(q, -std::numbers::pi / 2), RVector(), v);
    apply_gate(Gate::h(q), RVector(), v);
  }
  const std::uint64_t mask = s.support();
  const Eigen::Index dim = v.size();
  RVector parity(dim);
  for (Eigen::Index i = 0; i < dim; ++i) parity[i] = (std::popcount(static_cast<std::uint64_t>(i) & mask) & 1) ? -1.0 : 1.0;

  Counts counts = sample(StateVector(n, std::move(v)), shots, derive_seed(seed, {0}));
  if (!readout) {
    std::int64_t total = 0;
    const RVector f = frequencies(counts, n, total);
    const double m = parity.dot(f);
    return {m, std::sqrt(std::max(0.0, 1.0 - m * m) / static_cast<double>(total))};
  }
  if (readout->n_qubits() != n) throw std::invalid_argument("readout model width differs from the register");
  counts = apply_readout_error(counts, *readout, derive_seed(seed, {1}));
  std::int64_t total = 0;
  const RVector f = frequencies(counts, n, total);
  const RVector x = simplex_least_squares(readout->matrix(), f);
  // Delta-method error of the linear-inverse estimator b^T f with b = M^-T parity.
  const RVector b = readout->matrix().transpose().fullPivLu().solve(parity);
  const double mean_b = b.dot(f);
  const double var = (b.array().square() * f.array()).sum() - mean_b * mean_b;
  return {parity.dot(x), std::sqrt(std::max(0.0, var) / static_cast<double>(total))};
}

Estimate estimate_observable(const StateVector& psi, const PauliSum& hermitian, std::int64_t shots, std::uint64_t seed,
                             const ReadoutModel* readout) {
  if (hermitian.n_qubits() != psi.n_qubits()) throw std::invalid_argument("estimate_observable: register size mismatch");
  if (!hermitian.is_hermitian()) throw std::invalid_argument("estimate_observable: observable must be Hermitian");
  Estimate total;
  double variance = 0;
  std::uint64_t label = 0;
  for (const auto& [s, c] : hermitian.terms()) {
    const Estimate e = estimate_string(psi, s, shots, derive_seed(seed, {label++}), readout);
    total.mean += c.real() * e.mean;
    variance += c.real() * c.real() * e.std_error * e.std_error;
  }
  total.std_error = std::sqrt(variance);
  return total;
}

}  // namespace tchub
