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

#include "pdakit/scheme_sim.hpp"

#include <algorithm>
#include <random>

#include "parallel.hpp"

namespace pdakit {
namespace {

std::size_t packet_len(const PdaArray& p, const FileLibrary& lib) {
  if (lib.files.empty()) throw PreconditionError("library holds no files");
  for (const Bytes& f : lib.files) {
    if (f.size() != lib.file_len()) {
      throw PreconditionError("library files differ in length");
    }
  }
  if (lib.file_len() == 0 || lib.file_len() % p.rows() != 0) {
    throw PreconditionError("file length " + std::to_string(lib.file_len()) +
                            " is not a positive multiple of F = " +
                            std::to_string(p.rows()));
  }
  return lib.file_len() / p.rows();
}

Bytes packet_of(const FileLibrary& lib, std::size_t len, PacketId id) {
  const Bytes& f = lib.files[id.first];
  const auto begin = f.begin() + static_cast<std::ptrdiff_t>(id.second * len);
  return Bytes(begin, begin + static_cast<std::ptrdiff_t>(len));
}

void xor_into(Bytes& acc, const Bytes& b) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= b[i];
}

void check_demand(const PdaArray& p, const FileLibrary& lib,
                  const DemandVector& d) {
  if (d.size() != p.cols()) {
    throw PreconditionError("demand vector has " + std::to_string(d.size()) +
                            " entries, expected K = " +
                            std::to_string(p.cols()));
  }
  for (std::size_t v : d) {
    if (v < 1 || v > lib.file_count()) {
      throw PreconditionError("demand " + std::to_string(v) +
                              " is outside 1.." +
                              std::to_string(lib.file_count()));
    }
  }
}

// Cells of each color, in row-major order.
std::vector<std::vector<Cell>> color_classes(const PdaArray& p) {
  std::vector<std::vector<Cell>> out(p.colors());
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t k = 0; k < p.cols(); ++k) {
      const PdaEntry e = p.at(j, k);
      if (!e.is_star()) {
        out[static_cast<std::size_t>(e.color_index() - 1)].push_back({j, k});
      }
    }
  }
  return out;
}

SimulationOutcome run_one(const PdaArray& p, const FileLibrary& lib,
                          const CacheState& caches, const DemandVector& d) {
  SimulationOutcome out;
  out.demand = d;
  try {
    const BroadcastLog log = deliver(p, lib, d);
    out.broadcasts = log.slots.size();
    const std::vector<Bytes> got = decode(p, caches, log, d);
    for (std::size_t k = 0; k < got.size(); ++k) {
      if (got[k] != lib.files[d[k] - 1]) {
        out.failure = "user " + std::to_string(k + 1) +
                      " rebuilt the wrong bytes for file " +
                      std::to_string(d[k]);
        return out;
      }
    }
    out.ok = true;
  } catch (const DecodeFailure& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace

DecodeFailure::DecodeFailure(std::size_t user, std::size_t packet,
                             std::size_t slot, const std::string& why)
    : InvariantBreach("user " + std::to_string(user + 1) + " cannot decode packet " +
                      std::to_string(packet + 1) + " from slot " +
                      std::to_string(slot) + ": " + why),
      user_(user),
      packet_(packet),
      slot_(slot) {}

FileLibrary FileLibrary::random(std::size_t n, std::size_t file_len,
                                std::uint64_t seed) {
  if (n == 0) throw PreconditionError("a library needs at least one file");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  FileLibrary lib;
  lib.files.assign(n, Bytes(file_len));
  for (Bytes& f : lib.files) {
    for (auto& b : f) b = static_cast<std::uint8_t>(byte(rng));
  }
  return lib;
}

CacheState place(const PdaArray& p, const FileLibrary& lib) {
  const std::size_t len = packet_len(p, lib);
  CacheState state;
  state.users.resize(p.cols());
  for (std::size_t k = 0; k < p.cols(); ++k) {
    for (std::size_t j = 0; j < p.rows(); ++j) {
      if (!p.at(j, k).is_star()) continue;
      for (std::size_t i = 0; i < lib.file_count(); ++i) {
        state.users[k].emplace(PacketId{i, j}, packet_of(lib, len, {i, j}));
      }
    }
  }
  return state;
}

BroadcastLog deliver(const PdaArray& p, const FileLibrary& lib,
                     const DemandVector& d) {
  const std::size_t len = packet_len(p, lib);
  check_demand(p, lib, d);
  BroadcastLog log;
  for (auto& cells : color_classes(p)) {
    BroadcastSlot slot;
    slot.payload.assign(len, 0);
    for (const Cell& c : cells) {
      xor_into(slot.payload, packet_of(lib, len, {d[c.col] - 1, c.row}));
    }
    slot.contributors = std::move(cells);
    log.slots.push_back(std::move(slot));
  }
  return log;
}

std::vector<Bytes> decode(const PdaArray& p, const CacheState& caches,
                          const BroadcastLog& log, const DemandVector& d) {
  std::vector<Bytes> out(p.cols());
  for (std::size_t k = 0; k < p.cols(); ++k) {
    const auto& cache = caches.users.at(k);
    const std::size_t want = d.at(k) - 1;
    for (std::size_t j = 0; j < p.rows(); ++j) {
      const PdaEntry e = p.at(j, k);
      if (e.is_star()) {
        const auto it = cache.find({want, j});
        if (it == cache.end()) {
          throw DecodeFailure(k, j, 0, "starred packet is not cached");
        }
        out[k].insert(out[k].end(), it->second.begin(), it->second.end());
        continue;
      }
      const auto s = static_cast<std::size_t>(e.color_index());
      const BroadcastSlot& slot = log.slots.at(s - 1);
      Bytes acc = slot.payload;
      for (const Cell& c : slot.contributors) {
        if (c.row == j && c.col == k) continue;
        const auto it = cache.find({d.at(c.col) - 1, c.row});
        if (it == cache.end()) {
          throw DecodeFailure(k, j, s,
                              "packet " + std::to_string(c.row + 1) +
                                  " of file " + std::to_string(d.at(c.col)) +
                                  " is not cached");
        }
        xor_into(acc, it->second);
      }
      out[k].insert(out[k].end(), acc.begin(), acc.end());
    }
  }
  return out;
}

bool verify_roundtrip(const PdaArray& p, const FileLibrary& lib,
                      const DemandVector& d) {
  return run_one(p, lib, place(p, lib), d).ok;
}

std::vector<DemandVector> all_demands(std::size_t users, std::size_t files,
                                      std::size_t limit) {
  if (files == 0) throw PreconditionError("need at least one file");
  std::size_t total = 1;
  for (std::size_t k = 0; k < users; ++k) {
    if (total > limit / files) {
      throw PreconditionError("more than " + std::to_string(limit) +
                              " demand vectors");
    }
    total *= files;
  }
  std::vector<DemandVector> out;
  out.reserve(total);
  DemandVector d(users, 1);
  for (std::size_t n = 0; n < total; ++n) {
    out.push_back(d);
    for (std::size_t k = users; k-- > 0;) {
      if (d[k] < files) {
        ++d[k];
        break;
      }
      d[k] = 1;
    }
  }
  return out;
}

std::vector<DemandVector> random_demands(std::size_t users, std::size_t files,
                                         std::size_t count, std::uint64_t seed) {
  if (files == 0) throw PreconditionError("need at least one file");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, files);
  std::vector<DemandVector> out(count, DemandVector(users));
  for (auto& d : out) {
    for (auto& v : d) v = pick(rng);
  }
  return out;
}

std::vector<DemandVector> demand_set(std::size_t users, std::size_t files,
                                     std::uint64_t seed) {
  constexpr std::size_t kExhaustiveLimit = 4096;
  try {
    return all_demands(users, files, kExhaustiveLimit);
  } catch (const PreconditionError&) {
    if (files == 0) throw;
    return random_demands(users, files, 200, seed);
  }
}

std::vector<SimulationOutcome> simulate(const PdaArray& p,
                                        const FileLibrary& lib,
                                        const std::vector<DemandVector>& ds) {
  const CacheState caches = place(p, lib);
  for (const auto& d : ds) check_demand(p, lib, d);
  std::vector<SimulationOutcome> out(ds.size());
  const auto n = static_cast<std::ptrdiff_t>(ds.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = run_one(p, lib, caches, ds[u]);
  }
  return out;
}

std::vector<SimulationOutcome> simulate_reference(
    const PdaArray& p, const FileLibrary& lib,
    const std::vector<DemandVector>& ds) {
  std::vector<SimulationOutcome> out;
  out.reserve(ds.size());
  for (const auto& d : ds) {
    out.push_back(run_one(p, lib, place(p, lib), d));
  }
  return out;
}

std::string format_demand(const DemandVector& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(d[k]);
  }
  return out + ")";
}

}  // namespace pdakit
