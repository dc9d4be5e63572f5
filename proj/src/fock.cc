// Copyright 2026 The Teleamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teleamp/fock.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace teleamp {

OccupationVector::OccupationVector(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("negative photon count");
  }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

OccupationVector OccupationVector::vacuum(std::size_t modes) {
  return OccupationVector(std::vector<int>(modes, 0));
}

int OccupationVector::total_photons() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

OccupationVector OccupationVector::with(std::size_t mode, int count) const {
  if (mode >= counts_.size()) throw std::out_of_range("mode index out of range");
  std::vector<int> c = counts_;
  c[mode] = count;
  return OccupationVector(std::move(c));
}

OccupationVector OccupationVector::concat(const OccupationVector& other) const {
  std::vector<int> c = counts_;
  c.insert(c.end(), other.counts_.begin(), other.counts_.end());
  OccupationVector out;
  out.counts_ = std::move(c);
  return out;
}

OccupationVector OccupationVector::select(
    std::span<const std::size_t> modes) const {
  OccupationVector out;
  out.counts_.reserve(modes.size());
  for (std::size_t m : modes) {
    if (m >= counts_.size()) throw std::out_of_range("mode index out of range");
    out.counts_.push_back(counts_[m]);
  }
  return out;
}

std::string OccupationVector::label() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(counts_[i]);
  }
  return s;
}

namespace {

void compose(int remaining, std::size_t index, std::vector<int>& current,
             std::vector<OccupationVector>& out) {
  if (index + 1 == current.size()) {
    current[index] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    current[index] = c;
    compose(remaining - c, index + 1, current, out);
  }
}

// Modes of `total` not in `selected`, in increasing order.
std::vector<std::size_t> complement(std::size_t total,
                                    std::span<const std::size_t> selected) {
  std::vector<bool> taken(total, false);
  for (std::size_t m : selected) {
    if (m >= total) throw std::out_of_range("mode index out of range");
    if (taken[m]) throw std::invalid_argument("duplicate mode index");
    taken[m] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t m = 0; m < total; ++m) {
    if (!taken[m]) rest.push_back(m);
  }
  return rest;
}

}  // namespace

std::vector<OccupationVector> weak_compositions(int total, std::size_t parts) {
  if (total < 0) throw std::invalid_argument("negative photon total");
  std::vector<OccupationVector> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(parts, 0);
  compose(total, 0, current, out);
  return out;
}

PureState::PureState(std::size_t modes) : modes_(modes) {}

PureState::PureState(std::size_t modes, AmplitudeMap amplitudes)
    : modes_(modes), amplitudes_(std::move(amplitudes)) {
  for (const auto& [occ, amp] : amplitudes_) {
    if (occ.size() != modes_) {
      throw std::invalid_argument("occupation length does not match mode count");
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
  prune();
}

PureState PureState::vacuum(std::size_t modes) {
  return basis(OccupationVector::vacuum(modes));
}

PureState PureState::basis(const OccupationVector& occupation) {
  PureState s(occupation.size());
  s.amplitudes_.emplace(occupation, Complex(1.0, 0.0));
  return s;
}

PureState PureState::single_mode(std::span<const Complex> amplitudes) {
  AmplitudeMap map;
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    if (amplitudes[j] != Complex(0.0, 0.0)) {
      map.emplace(OccupationVector{static_cast<int>(j)}, amplitudes[j]);
    }
  }
  return PureState(1, std::move(map));
}

PureState PureState::single_mode(std::initializer_list<Complex> amplitudes) {
  return single_mode(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

Complex PureState::amplitude(const OccupationVector& occupation) const {
  auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? Complex(0.0, 0.0) : it->second;
}

double PureState::norm2() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : amplitudes_) sum += std::norm(amp);
  return sum;
}

int PureState::max_photons() const {
  int best = 0;
  for (const auto& [occ, amp] : amplitudes_) {
    best = std::max(best, *std::max_element(occ.counts().begin(), occ.counts().end()));
  }
  return best;
}

void PureState::accumulate(const OccupationVector& occupation, Complex value) {
  if (occupation.size() != modes_) {
    throw std::invalid_argument("occupation length does not match mode count");
  }
  amplitudes_[occupation] += value;
}

void PureState::prune(double threshold) {
  std::erase_if(amplitudes_,
                [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

PureState PureState::scaled(Complex factor) const {
  PureState out(modes_);
  for (const auto& [occ, amp] : amplitudes_) out.amplitudes_.emplace(occ, amp * factor);
  out.prune();
  return out;
}

MixedState::MixedState(std::vector<Branch> branches)
    : modes_(0), branches_(std::move(branches)) {
  if (branches_.empty()) throw std::invalid_argument("empty ensemble");
  modes_ = branches_.front().state.modes();
  for (const Branch& b : branches_) {
    if (!(b.weight > 0.0)) throw std::invalid_argument("branch weight must be positive");
    if (b.state.modes() != modes_) throw std::invalid_argument("branch mode mismatch");
    if (std::abs(b.state.norm2() - 1.0) > kNormTolerance) {
      throw std::invalid_argument("branch state is not normalized");
    }
  }
  if (std::abs(total_weight() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("ensemble weights do not sum to 1");
  }
}

MixedState::MixedState(PureState state)
    : MixedState(std::vector<Branch>{{1.0, std::move(state)}}) {}

MixedState MixedState::from_components(std::vector<PureState> components) {
  std::vector<Branch> branches;
  for (PureState& c : components) {
    if (c.empty()) continue;
    Normalized n = normalize(c);
    branches.push_back({n.norm2, std::move(n.state)});
  }
  return MixedState(std::move(branches));
}

double MixedState::total_weight() const {
  double sum = 0.0;
  for (const Branch& b : branches_) sum += b.weight;
  return sum;
}

PureState tensor(const PureState& a, const PureState& b) {
  PureState out(a.modes() + b.modes());
  for (const auto& [oa, va] : a.amplitudes()) {
    for (const auto& [ob, vb] : b.amplitudes()) {
      out.accumulate(oa.concat(ob), va * vb);
    }
  }
  out.prune();
  return out;
}

PureState add(const PureState& a, const PureState& b) {
  if (a.modes() != b.modes()) throw std::invalid_argument("mode count mismatch");
  PureState out = a;
  for (const auto& [occ, amp] : b.amplitudes()) out.accumulate(occ, amp);
  out.prune();
  return out;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.modes() != b.modes()) throw std::invalid_argument("mode count mismatch");
  const PureState& small = a.term_count() <= b.term_count() ? a : b;
  const PureState& large = &small == &a ? b : a;
  Complex sum(0.0, 0.0);
  for (const auto& [occ, amp] : small.amplitudes()) {
    Complex other = large.amplitude(occ);
    sum += &small == &a ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return sum;
}

std::map<OccupationVector, PureState> split_by_pattern(
    const PureState& s, std::span<const std::size_t> modes) {
  std::vector<std::size_t> rest = complement(s.modes(), modes);
  std::map<OccupationVector, PureState> groups;
  for (const auto& [occ, amp] : s.amplitudes()) {
    OccupationVector key = occ.select(modes);
    auto it = groups.try_emplace(std::move(key), rest.size()).first;
    it->second.accumulate(occ.select(rest), amp);
  }
  for (auto& [key, residual] : groups) residual.prune();
  std::erase_if(groups, [](const auto& kv) { return kv.second.empty(); });
  return groups;
}

PureState project_modes(const PureState& s, const OccupationVector& pattern,
                        std::span<const std::size_t> modes) {
  if (pattern.size() != modes.size()) {
    throw std::invalid_argument("pattern length does not match mode list");
  }
  std::vector<std::size_t> rest = complement(s.modes(), modes);
  PureState out(rest.size());
  for (const auto& [occ, amp] : s.amplitudes()) {
    if (occ.select(modes) == pattern) out.accumulate(occ.select(rest), amp);
  }
  out.prune();
  return out;
}

std::vector<PureState> reduce_to_modes(const PureState& s,
                                       std::span<const std::size_t> keep) {
  std::vector<std::size_t> traced = complement(s.modes(), keep);
  std::map<OccupationVector, PureState> groups;
  for (const auto& [occ, amp] : s.amplitudes()) {
    auto it = groups.try_emplace(occ.select(traced), keep.size()).first;
    it->second.accumulate(occ.select(keep), amp);
  }
  std::vector<PureState> out;
  out.reserve(groups.size());
  for (auto& [key, component] : groups) {
    component.prune();
    if (!component.empty()) out.push_back(std::move(component));
  }
  return out;
}

double fidelity_pure(const PureState& a, const PureState& b) {
  return std::norm(inner_product(a, b));
}

double fidelity_mixed(const MixedState& rho, const PureState& target) {
  if (rho.modes() != target.modes()) throw std::invalid_argument("mode count mismatch");
  double sum = 0.0;
  for (const Branch& b : rho.branches()) sum += b.weight * fidelity_pure(target, b.state);
  return sum;
}

Normalized normalize(const PureState& s) {
  double n2 = s.norm2();
  if (!(n2 > 0.0)) throw std::domain_error("cannot normalize a zero state");
  return {s.scaled(1.0 / std::sqrt(n2)), n2};
}

PureState apply_number_phase(const PureState& s, std::size_t mode, Complex phase) {
  if (mode >= s.modes()) throw std::out_of_range("mode index out of range");
  PureState out(s.modes());
  for (const auto& [occ, amp] : s.amplitudes()) {
    Complex factor(1.0, 0.0);
    for (int k = 0; k < occ[mode]; ++k) factor *= phase;
    out.accumulate(occ, amp * factor);
  }
  out.prune();
  return out;
}

}  // namespace teleamp
