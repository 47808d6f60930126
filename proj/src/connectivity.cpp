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

#include "qroute/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qroute {

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::Path: return "path";
    case Topology::Square: return "square";
  }
  return "unknown";
}

std::optional<Topology> parse_topology(std::string_view name) {
  if (name == "path") return Topology::Path;
  if (name == "square") return Topology::Square;
  return std::nullopt;
}

CouplingGraph::CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges,
                             std::optional<std::vector<Coord>> coords)
    : edges_(std::move(edges)), adjacency_(num_qubits), coords_(std::move(coords)) {
  if (coords_ && coords_->size() != num_qubits) {
    throw std::invalid_argument("coordinate count does not match qubit count");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw std::invalid_argument("self-loop on qubit " + std::to_string(e.u));
    if (e.v >= num_qubits) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool CouplingGraph::has_edge(Qubit a, Qubit b) const {
  if (a >= num_qubits() || b >= num_qubits()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::int32_t> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) throw std::invalid_argument("distance matrix must be n*n");
}

std::int32_t DistanceMatrix::diameter() const noexcept {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

CouplingGraph build_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("path graph needs at least 2 qubits");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Qubit>(i), static_cast<Qubit>(i + 1));
  std::vector<Coord> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = {0, static_cast<int>(i)};
  return CouplingGraph(n, std::move(edges), std::move(coords));
}

namespace {

// Distances restricted to alive vertices; -1 marks unreachable or dead.
std::vector<std::int32_t> bfs_from(const std::vector<std::vector<Qubit>>& adj, const std::vector<bool>& alive,
                                   Qubit src) {
  std::vector<std::int32_t> d(adj.size(), -1);
  std::queue<Qubit> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const Qubit u = q.front();
    q.pop();
    for (Qubit w : adj[u]) {
      if (alive[w] && d[w] < 0) {
        d[w] = d[u] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

}  // namespace

CouplingGraph build_square(std::size_t n) {
  if (n < 2) throw std::invalid_argument("square lattice needs at least 2 qubits");
  std::size_t side = 1;
  while (side * side < n) ++side;
  const std::size_t total = side * side;

  std::vector<std::vector<Qubit>> adj(total);
  auto idx = [side](std::size_t r, std::size_t c) { return static_cast<Qubit>(r * side + c); };
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) {
        adj[idx(r, c)].push_back(idx(r, c + 1));
        adj[idx(r, c + 1)].push_back(idx(r, c));
      }
      if (r + 1 < side) {
        adj[idx(r, c)].push_back(idx(r + 1, c));
        adj[idx(r + 1, c)].push_back(idx(r, c));
      }
    }
  }

  // Row-major index order coincides with lexicographic (row, col) order, so
  // scanning u < v in index order and keeping strict improvements implements
  // the tie-break.
  std::vector<bool> alive(total, true);
  std::size_t remaining = total;
  while (remaining > n) {
    std::int32_t best = -1;
    Qubit best_u = 0, best_v = 0;
    for (Qubit u = 0; u < total; ++u) {
      if (!alive[u]) continue;
      const auto d = bfs_from(adj, alive, u);
      for (Qubit v = u + 1; v < total; ++v) {
        if (alive[v] && d[v] > best) {
          best = d[v];
          best_u = u;
          best_v = v;
        }
      }
    }
    auto connected = [&] {
      const Qubit probe = static_cast<Qubit>(std::find(alive.begin(), alive.end(), true) - alive.begin());
      const auto reach = bfs_from(adj, alive, probe);
      for (Qubit v = 0; v < total; ++v)
        if (alive[v] && reach[v] < 0) return false;
      return true;
    };
    alive[best_u] = false;
    --remaining;
    if (remaining > n) {
      alive[best_v] = false;
      --remaining;
      // Only bites on the 2x2 grid, where the diagonal pair is the farthest.
      if (!connected()) {
        alive[best_v] = true;
        ++remaining;
      }
    }
    if (!connected()) throw std::logic_error("square trimming disconnected the lattice");
  }

  std::vector<Qubit> relabel(total, std::numeric_limits<Qubit>::max());
  std::vector<Coord> coords;
  coords.reserve(n);
  for (Qubit u = 0; u < total; ++u) {
    if (!alive[u]) continue;
    relabel[u] = static_cast<Qubit>(coords.size());
    coords.push_back({static_cast<int>(u / side), static_cast<int>(u % side)});
  }
  std::vector<Edge> edges;
  for (Qubit u = 0; u < total; ++u) {
    if (!alive[u]) continue;
    for (Qubit w : adj[u]) {
      if (w > u && alive[w]) edges.emplace_back(relabel[u], relabel[w]);
    }
  }
  return CouplingGraph(n, std::move(edges), std::move(coords));
}

CouplingGraph build_graph(Topology topology, std::size_t n) {
  return topology == Topology::Path ? build_path(n) : build_square(n);
}

DistanceMatrix all_pairs_distances(const CouplingGraph& graph) {
  const std::size_t n = graph.num_qubits();
  std::vector<std::int32_t> data(n * n, -1);
  std::vector<Qubit> queue(n);
  for (Qubit s = 0; s < n; ++s) {
    std::int32_t* d = data.data() + static_cast<std::size_t>(s) * n;
    std::size_t head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Qubit u = queue[head++];
      for (Qubit w : graph.neighbors(u)) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw std::invalid_argument("coupling graph is disconnected");
  }
  return DistanceMatrix(n, std::move(data));
}

double mean_shortest_path(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (n < 2) throw std::invalid_argument("mean shortest path needs at least 2 qubits");
  // Integer accumulation keeps the sum exact.
  std::uint64_t sum = 0;
  for (Qubit j = 0; j < n; ++j) {
    for (Qubit k = j + 1; k < n; ++k) sum += static_cast<std::uint64_t>(dist(j, k));
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(sum) / pairs;
}

double analytic_mean_path(Topology kind, std::size_t n) {
  if (n < 2) throw std::invalid_argument("analytic mean path needs n >= 2");
  if (kind == Topology::Path) return (static_cast<double>(n) + 1.0) / 3.0;
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (side * side != n) {
    throw std::invalid_argument("square-lattice formula needs a perfect square, got " + std::to_string(n));
  }
  return 2.0 * static_cast<double>(side) / 3.0;
}

std::uint64_t count_shortest_paths_square(std::uint32_t dr, std::uint32_t dc) {
  const std::uint32_t k = std::min(dr, dc);
  const std::uint64_t total = static_cast<std::uint64_t>(dr) + dc;
  std::uint64_t result = 1;
  // result = C(total - k + i, i) after step i; each step divides exactly.
  for (std::uint32_t i = 1; i <= k; ++i) {
    const std::uint64_t num = total - k + i;
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t r = result / g;
    const std::uint64_t m = num / (i / g);
    if (r != 0 && m > std::numeric_limits<std::uint64_t>::max() / r) {
      throw std::overflow_error("shortest path count exceeds 64 bits");
    }
    result = r * m;
  }
  return result;
}

void write_edge_list(std::ostream& out, const CouplingGraph& graph) {
  out << "# qubits " << graph.num_qubits() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

CouplingGraph read_edge_list(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string key;
      long long value = -1;
      if (ls >> key && key == "qubits" && ls >> value && value > 0) n = static_cast<std::size_t>(value);
      continue;
    }
    if (first.front() == '#') continue;
    long long u = -1, v = -1;
    std::istringstream es(line);
    if (!(es >> u >> v) || u < 0 || v < 0) throw std::runtime_error("edge list: bad line '" + line + "'");
    edges.emplace_back(static_cast<Qubit>(u), static_cast<Qubit>(v));
  }
  if (!n) throw std::runtime_error("edge list: missing '# qubits N' header");
  return CouplingGraph(*n, std::move(edges));
}

}  // namespace qroute
