// Copyright 2026 The Authors.
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

#include "gdcst/matroid.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "gdcst/error.hpp"
#include "gdcst/union_find.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

}  // namespace

GraphicMatroid::GraphicMatroid(Multigraph graph) : graph_(std::move(graph)) {
  for (const Edge& e : graph_.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= graph_.vertex_count ||
        e.v >= graph_.vertex_count) {
      throw Error(ErrorCode::kIndexOutOfRange, "graphic matroid edge endpoint");
    }
  }
}

bool GraphicMatroid::is_independent(std::span<const Element> subset) const {
  UnionFind uf(graph_.vertex_count);
  for (Element x : subset) {
    const Edge& e = graph_.edges[idx(x)];
    if (!uf.unite(e.u, e.v)) return false;  // loops fail here too
  }
  return true;
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<std::vector<Element>> blocks,
                                   std::vector<int> capacities)
    : ground_size_(ground_size),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(idx(ground_size), -1) {
  if (blocks_.size() != capacities_.size()) {
    throw Error(ErrorCode::kSizeMismatch, "one capacity per block required");
  }
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0 ||
        capacities_[b] > static_cast<int>(blocks_[b].size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block capacity outside 0..|block|");
    }
    for (Element x : blocks_[b]) {
      if (x < 0 || x >= ground_size_) {
        throw Error(ErrorCode::kIndexOutOfRange, "block element outside ground set");
      }
      if (block_of_[idx(x)] >= 0) {
        throw Error(ErrorCode::kInvalidArgument, "blocks are not disjoint");
      }
      block_of_[idx(x)] = static_cast<int>(b);
    }
  }
}

bool PartitionMatroid::is_independent(std::span<const Element> subset) const {
  std::vector<int> used(capacities_.size(), 0);
  for (Element x : subset) {
    const int b = block_of_[idx(x)];
    if (b >= 0 && ++used[idx(b)] > capacities_[idx(b)]) return false;
  }
  return true;
}

bool graphic_independent(const GraphicMatroid& matroid,
                         std::span<const Element> subset) {
  return matroid.is_independent(subset);
}

bool partition_independent(const PartitionMatroid& matroid,
                           std::span<const Element> subset) {
  return matroid.is_independent(subset);
}

namespace {

class CountingOracle {
 public:
  CountingOracle(const Matroid& m, IntersectionStats* stats)
      : m_(m), stats_(stats) {}

  bool operator()(std::span<const Element> s) const {
    if (stats_) ++stats_->oracle_calls;
    return m_.is_independent(s);
  }

 private:
  const Matroid& m_;
  IntersectionStats* stats_;
};

// Exchange graph for the current common independent set I:
//   y -> x  when I - y + x is independent in m1,
//   x -> y  when I - y + x is independent in m2,
// for y in I and x outside I. Sources can be added to I in m1, sinks in m2.
struct ExchangeGraph {
  std::vector<bool> source;
  std::vector<bool> sink;
  std::vector<std::vector<Element>> out;
};

ExchangeGraph build_exchange_graph(const CountingOracle& m1,
                                   const CountingOracle& m2,
                                   const std::vector<bool>& in_set) {
  const int n = static_cast<int>(in_set.size());
  std::vector<Element> current;
  for (Element e = 0; e < n; ++e) {
    if (in_set[idx(e)]) current.push_back(e);
  }
  ExchangeGraph g;
  g.source.assign(idx(n), false);
  g.sink.assign(idx(n), false);
  g.out.assign(idx(n), {});

  std::vector<Element> buf = current;
  buf.push_back(0);
  for (Element x = 0; x < n; ++x) {
    if (in_set[idx(x)]) continue;
    buf.back() = x;
    g.source[idx(x)] = m1(buf);
    g.sink[idx(x)] = m2(buf);
  }

  for (size_t slot = 0; slot < current.size(); ++slot) {
    const Element y = current[slot];
    buf = current;
    for (Element x = 0; x < n; ++x) {
      if (in_set[idx(x)]) continue;
      buf[slot] = x;
      // I + x independent implies I - y + x independent.
      if (g.source[idx(x)] || m1(buf)) g.out[idx(y)].push_back(x);
      if (g.sink[idx(x)] || m2(buf)) g.out[idx(x)].push_back(y);
    }
  }
  for (auto& list : g.out) std::sort(list.begin(), list.end());
  return g;
}

void check_ground(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "ground sets of size " + std::to_string(m1.ground_size()) +
                    " and " + std::to_string(m2.ground_size()));
  }
}

std::vector<Element> members(const std::vector<bool>& in_set) {
  std::vector<Element> out;
  for (size_t i = 0; i < in_set.size(); ++i) {
    if (in_set[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

void apply_path(std::vector<bool>& in_set, const std::vector<Element>& parent,
                Element end) {
  const size_t limit = in_set.size() + 1;
  size_t steps = 0;
  for (Element x = end; x >= 0; x = parent[idx(x)]) {
    in_set[idx(x)] = !in_set[idx(x)];
    if (++steps > limit) throw std::logic_error("exchange path is not simple");
  }
}

}  // namespace

std::vector<Element> max_common_independent(const Matroid& m1,
                                            const Matroid& m2,
                                            IntersectionStats* stats) {
  check_ground(m1, m2);
  const int n = m1.ground_size();
  const CountingOracle o1(m1, stats);
  const CountingOracle o2(m2, stats);
  std::vector<bool> in_set(idx(n), false);

  while (true) {
    const ExchangeGraph g = build_exchange_graph(o1, o2, in_set);
    std::vector<Element> parent(idx(n), -1);
    std::vector<bool> seen(idx(n), false);
    std::queue<Element> queue;
    for (Element x = 0; x < n; ++x) {
      if (g.source[idx(x)]) {
        seen[idx(x)] = true;
        queue.push(x);
      }
    }
    Element end = -1;
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop();
      if (!in_set[idx(x)] && g.sink[idx(x)]) {
        end = x;
        break;
      }
      for (Element y : g.out[idx(x)]) {
        if (!seen[idx(y)]) {
          seen[idx(y)] = true;
          parent[idx(y)] = x;
          queue.push(y);
        }
      }
    }
    if (end < 0) break;
    apply_path(in_set, parent, end);
    if (stats) ++stats->augmentations;
  }
  return members(in_set);
}

std::optional<std::vector<Element>> min_weight_common_independent_of_size(
    const Matroid& m1, const Matroid& m2, std::span<const Weight> weights,
    int size, IntersectionStats* stats) {
  check_ground(m1, m2);
  const int n = m1.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kSizeMismatch, "one weight per ground element required");
  }
  if (size < 0) throw Error(ErrorCode::kInvalidArgument, "negative target size");
  if (size > n) return std::nullopt;

  const CountingOracle o1(m1, stats);
  const CountingOracle o2(m2, stats);
  std::vector<bool> in_set(idx(n), false);

  // Each round keeps I extreme (minimum weight for its size); the cheapest
  // augmenting path, ties broken by fewest arcs, preserves that.
  struct Dist {
    Weight cost;
    int hops;
    bool operator<(const Dist& o) const {
      return cost != o.cost ? cost < o.cost : hops < o.hops;
    }
  };

  for (int round = 0; round < size; ++round) {
    const ExchangeGraph g = build_exchange_graph(o1, o2, in_set);
    auto length = [&](Element x) {
      return in_set[idx(x)] ? -weights[idx(x)] : weights[idx(x)];
    };
    std::vector<std::optional<Dist>> dist(idx(n));
    std::vector<Element> parent(idx(n), -1);
    for (Element x = 0; x < n; ++x) {
      if (g.source[idx(x)]) dist[idx(x)] = Dist{length(x), 0};
    }
    bool changed = true;
    int passes = 0;
    while (changed) {
      changed = false;
      if (++passes > n + 1) {
        throw std::logic_error("negative cycle in exchange graph");
      }
      for (Element x = 0; x < n; ++x) {
        if (!dist[idx(x)]) continue;
        for (Element y : g.out[idx(x)]) {
          const Dist cand{checked_add(dist[idx(x)]->cost, length(y)),
                          dist[idx(x)]->hops + 1};
          if (!dist[idx(y)] || cand < *dist[idx(y)]) {
            dist[idx(y)] = cand;
            parent[idx(y)] = x;
            changed = true;
          }
        }
      }
    }
    Element end = -1;
    for (Element x = 0; x < n; ++x) {
      if (in_set[idx(x)] || !g.sink[idx(x)] || !dist[idx(x)]) continue;
      if (end < 0 || *dist[idx(x)] < *dist[idx(end)]) end = x;
    }
    if (end < 0) return std::nullopt;
    apply_path(in_set, parent, end);
    if (stats) ++stats->augmentations;
  }
  return members(in_set);
}

}  // namespace gdcst
