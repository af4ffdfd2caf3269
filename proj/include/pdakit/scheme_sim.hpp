// Copyright 2026 The pdakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdakit/errors.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {

using Bytes = std::vector<std::uint8_t>;

/// N files W_1..W_N of equal length.
struct FileLibrary {
  std::vector<Bytes> files;

  std::size_t file_count() const { return files.size(); }
  std::size_t file_len() const { return files.empty() ? 0 : files[0].size(); }

  /// Deterministic pseudorandom contents for a given seed.
  static FileLibrary random(std::size_t n, std::size_t file_len,
                            std::uint64_t seed);
};

/// (file, packet), both 0-based: packet j of file i is W_{i+1, j+1}.
using PacketId = std::pair<std::size_t, std::size_t>;

/// What every user stored during placement.
struct CacheState {
  std::vector<std::map<PacketId, Bytes>> users;
};

struct BroadcastSlot {
  Bytes payload;
  std::vector<Cell> contributors;  // entries (j, k) with p_{j,k} = s
};

/// One slot per color, slot s - 1 for color s.
struct BroadcastLog {
  std::vector<BroadcastSlot> slots;
};

/// d_k in 1..N for every user k.
using DemandVector = std::vector<std::size_t>;

/// A user could not rebuild a packet. On a valid array this is a bug.
class DecodeFailure : public InvariantBreach {
 public:
  DecodeFailure(std::size_t user, std::size_t packet, std::size_t slot,
                const std::string& why);

  std::size_t user() const { return user_; }      // 0-based
  std::size_t packet() const { return packet_; }  // 0-based
  std::size_t slot() const { return slot_; }      // color, 1-based

 private:
  std::size_t user_;
  std::size_t packet_;
  std::size_t slot_;
};

// Placement, delivery and decoding only look at the grid; they do not insist
// on conditions A-C, so broken arrays can be run to see them fail.

/// Throws PreconditionError unless F divides the file length.
CacheState place(const PdaArray& p, const FileLibrary& lib);

/// Throws PreconditionError when d has the wrong length or leaves 1..N.
BroadcastLog deliver(const PdaArray& p, const FileLibrary& lib,
                     const DemandVector& d);

/// Rebuilds W_{d_k} for every user k. Throws DecodeFailure when a needed
/// packet is missing from the user's cache.
std::vector<Bytes> decode(const PdaArray& p, const CacheState& caches,
                          const BroadcastLog& log, const DemandVector& d);

/// place + deliver + decode and a byte comparison with the library. False on
/// any decode failure or mismatch.
bool verify_roundtrip(const PdaArray& p, const FileLibrary& lib,
                      const DemandVector& d);

/// All N^K demand vectors in lexicographic order. Throws PreconditionError
/// above `limit` vectors.
std::vector<DemandVector> all_demands(std::size_t users, std::size_t files,
                                      std::size_t limit = 4096);

std::vector<DemandVector> random_demands(std::size_t users, std::size_t files,
                                         std::size_t count, std::uint64_t seed);

/// Exhaustive when N^K <= 4096, otherwise 200 seeded vectors.
std::vector<DemandVector> demand_set(std::size_t users, std::size_t files,
                                     std::uint64_t seed);

struct SimulationOutcome {
  DemandVector demand;
  bool ok = false;
  std::size_t broadcasts = 0;
  std::string failure;  // empty when ok
};

/// Runs verify_roundtrip-style checks for each demand, in parallel.
std::vector<SimulationOutcome> simulate(const PdaArray& p,
                                        const FileLibrary& lib,
                                        const std::vector<DemandVector>& ds);

/// Serial version of simulate(), same results.
std::vector<SimulationOutcome> simulate_reference(
    const PdaArray& p, const FileLibrary& lib,
    const std::vector<DemandVector>& ds);

std::string format_demand(const DemandVector& d);

}  // namespace pdakit
