// Copyright 2026 The qroute Authors
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
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

enum class Topology { Path, Square };

std::string_view to_string(Topology t);
std::optional<Topology> parse_topology(std::string_view name);

/// Undirected edge with u < v.
struct Edge {
  Qubit u = 0;
  Qubit v = 0;

  Edge() = default;
  Edge(Qubit a, Qubit b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Coord {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/**
 * Device connectivity. Edges are stored canonically (u < v) and sorted; the
 * constructor rejects self-loops, duplicates and out-of-range endpoints.
 * Connectedness is checked by all_pairs_distances(), which every consumer
 * goes through.
 */
class CouplingGraph {
 public:
  CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges,
                std::optional<std::vector<Coord>> coords = std::nullopt);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Qubit> neighbors(Qubit q) const { return adjacency_[q]; }
  [[nodiscard]] bool has_edge(Qubit a, Qubit b) const;
  [[nodiscard]] const std::optional<std::vector<Coord>>& coords() const noexcept { return coords_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
  std::optional<std::vector<Coord>> coords_;
};

/// Hop-count distances between every pair of physical qubits.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<std::int32_t> data);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::int32_t operator()(Qubit a, Qubit b) const noexcept { return data_[a * n_ + b]; }
  [[nodiscard]] std::span<const std::int32_t> row(Qubit a) const { return {data_.data() + a * n_, n_}; }
  [[nodiscard]] std::int32_t diameter() const noexcept;

 private:
  std::size_t n_;
  std::vector<std::int32_t> data_;
};

/// Line 0-1-...-(n-1). Requires n >= 2.
CouplingGraph build_path(std::size_t n);

/**
 * Square lattice on n qubits. Starts from a ceil(sqrt(n))-sided grid and
 * repeatedly removes the pair of qubits farthest apart (ties go to the
 * lexicographically smallest (row, col) of the first, then the second qubit)
 * until n remain. If a single removal is left, only the first qubit of the
 * selected pair goes, and likewise when removing both would disconnect the
 * lattice. Survivors are numbered in row-major order.
 */
CouplingGraph build_square(std::size_t n);

CouplingGraph build_graph(Topology topology, std::size_t n);

/// BFS from every vertex. Throws std::invalid_argument for disconnected graphs.
DistanceMatrix all_pairs_distances(const CouplingGraph& graph);

/// Mean hop distance over unordered pairs.
double mean_shortest_path(const DistanceMatrix& dist);

/// (n+1)/3 for the path, 2*sqrt(n)/3 for the full n = k*k lattice.
double analytic_mean_path(Topology kind, std::size_t n);

/// Number of monotone lattice paths spanning `dr` rows and `dc` columns:
/// binomial(dr + dc, dr). Throws std::overflow_error past 64 bits.
std::uint64_t count_shortest_paths_square(std::uint32_t dr, std::uint32_t dc);

// Edge list: `# qubits N` header followed by `u v` per line.
void write_edge_list(std::ostream& out, const CouplingGraph& graph);
CouplingGraph read_edge_list(std::istream& in);

}  // namespace qroute
