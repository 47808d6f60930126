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

#include "qroute/layout.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "qroute/random.hpp"

namespace qroute {

Layout Layout::identity(std::size_t n) {
  std::vector<Qubit> p(n);
  std::iota(p.begin(), p.end(), Qubit{0});
  return from_physical(std::move(p));
}

Layout Layout::random(std::size_t n, std::uint64_t seed) {
  std::vector<Qubit> p(n);
  std::iota(p.begin(), p.end(), Qubit{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(p[i - 1], p[j]);
  }
  return from_physical(std::move(p));
}

Layout Layout::from_physical(std::vector<Qubit> to_physical) {
  Layout l;
  const std::size_t n = to_physical.size();
  l.to_logical_.assign(n, static_cast<Qubit>(n));
  for (std::size_t q = 0; q < n; ++q) {
    const Qubit p = to_physical[q];
    if (p >= n || l.to_logical_[p] != n) throw std::invalid_argument("layout is not a permutation");
    l.to_logical_[p] = static_cast<Qubit>(q);
  }
  l.to_physical_ = std::move(to_physical);
  return l;
}

void Layout::swap_physical(Qubit a, Qubit b) noexcept {
  const Qubit la = to_logical_[a];
  const Qubit lb = to_logical_[b];
  to_logical_[a] = lb;
  to_logical_[b] = la;
  to_physical_[la] = b;
  to_physical_[lb] = a;
}

Layout apply_swap(Layout layout, Edge edge) {
  layout.swap_physical(edge.u, edge.v);
  return layout;
}

}  // namespace qroute
