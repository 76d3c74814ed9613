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

#pragma once

// Shared-key encryption of qubit messages with a random-unitary channel, and
// the view of an eavesdropper who holds the ciphertext but not the key.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpqc/channels.hpp"
#include "qpqc/qmath.hpp"

namespace qpqc {

/// SplitMix64 (Steele, Lea, Flood 2014). The key stream format depends on
/// this exact sequence, so it is spelled out rather than taken from <random>,
/// whose distributions are not portable across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

struct KeyStream {
  std::uint64_t seed = 0;
  std::vector<std::size_t> indices;
};

struct Message {
  std::vector<BlochVector> slots;
};

struct TransmissionReport {
  std::size_t n_slots = 0;
  double max_roundtrip_error = 0.0;
  BlochVector eavesdropper_ciphertext;
  double max_eavesdropper_deviation = 0.0;
};

/// n term indices drawn by inverse CDF over the channel weights in term
/// order, one SplitMix64 draw per index. Zero-weight terms are never drawn.
KeyStream generate_key(const RandomUnitaryChannel& ch, std::size_t n, std::uint64_t seed);

/// Slot i becomes U_{k_i} rho_i U_{k_i}^dagger. Throws InvalidArgument on a
/// length mismatch or an index outside the channel.
Message encrypt(const Message& msg, const KeyStream& key, const RandomUnitaryChannel& ch);
/// Inverse of encrypt under the same key.
Message decrypt(const Message& msg, const KeyStream& key, const RandomUnitaryChannel& ch);

/// What an interceptor without the key holds: the full mixture E(rho).
BlochVector eavesdropper_view(const BlochVector& rho, const RandomUnitaryChannel& ch);

/// Encrypts and decrypts msg with key, and scans all pairs of eavesdropper
/// views. eavesdropper_ciphertext is the view of the first slot.
TransmissionReport audit(const Message& msg, const RandomUnitaryChannel& ch,
                         const KeyStream& key);

}  // namespace qpqc
