// Copyright 2026 The qpqc Authors
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

#include "qpqc/protocol.hpp"

#include <algorithm>

namespace qpqc {

namespace {

void check_lengths(const Message& msg, const KeyStream& key, const RandomUnitaryChannel& ch) {
  if (msg.slots.size() != key.indices.size())
    throw InvalidArgument("key length does not match message length");
  for (std::size_t idx : key.indices)
    if (idx >= ch.size()) throw InvalidArgument("key index outside the channel");
}

BlochVector conjugate(const QubitUnitary& u, const BlochVector& r) {
  return density_to_bloch(u.conjugate(bloch_to_density(r)));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

KeyStream generate_key(const RandomUnitaryChannel& ch, std::size_t n, std::uint64_t seed) {
  const auto& terms = ch.terms();
  std::vector<double> cdf;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    acc += terms[j].p;
    cdf.push_back(acc);
    if (terms[j].p > 0.0) last_positive = j;
  }

  KeyStream key{seed, {}};
  key.indices.reserve(n);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_unit();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Rounding can leave the cumulative sum a hair below one.
    std::size_t idx = it == cdf.end() ? last_positive : static_cast<std::size_t>(it - cdf.begin());
    key.indices.push_back(std::min(idx, last_positive));
  }
  return key;
}

Message encrypt(const Message& msg, const KeyStream& key, const RandomUnitaryChannel& ch) {
  check_lengths(msg, key, ch);
  Message out;
  out.slots.reserve(msg.slots.size());
  for (std::size_t i = 0; i < msg.slots.size(); ++i)
    out.slots.push_back(conjugate(ch.terms()[key.indices[i]].u, msg.slots[i]));
  return out;
}

Message decrypt(const Message& msg, const KeyStream& key, const RandomUnitaryChannel& ch) {
  check_lengths(msg, key, ch);
  Message out;
  out.slots.reserve(msg.slots.size());
  for (std::size_t i = 0; i < msg.slots.size(); ++i)
    out.slots.push_back(conjugate(ch.terms()[key.indices[i]].u.adjoint(), msg.slots[i]));
  return out;
}

BlochVector eavesdropper_view(const BlochVector& rho, const RandomUnitaryChannel& ch) {
  return apply(ch, rho);
}

TransmissionReport audit(const Message& msg, const RandomUnitaryChannel& ch,
                         const KeyStream& key) {
  TransmissionReport rep;
  rep.n_slots = msg.slots.size();
  const Message restored = decrypt(encrypt(msg, key, ch), key, ch);
  for (std::size_t i = 0; i < msg.slots.size(); ++i)
    rep.max_roundtrip_error =
        std::max(rep.max_roundtrip_error, norm(restored.slots[i].r() - msg.slots[i].r()));

  // Trace distance between qubit states is the Bloch-vector distance.
  std::vector<BlochVector> views;
  views.reserve(msg.slots.size());
  for (const auto& s : msg.slots) views.push_back(eavesdropper_view(s, ch));
  if (!views.empty()) rep.eavesdropper_ciphertext = views.front();
  // Repeated slots give identical views; drop them before the O(n^2) scan.
  std::sort(views.begin(), views.end(),
            [](const BlochVector& a, const BlochVector& b) { return a.r() < b.r(); });
  views.erase(std::unique(views.begin(), views.end(),
                          [](const BlochVector& a, const BlochVector& b) { return a.r() == b.r(); }),
              views.end());
  for (std::size_t i = 0; i < views.size(); ++i)
    for (std::size_t j = i + 1; j < views.size(); ++j)
      rep.max_eavesdropper_deviation =
          std::max(rep.max_eavesdropper_deviation, norm(views[i].r() - views[j].r()));
  return rep;
}

}  // namespace qpqc
