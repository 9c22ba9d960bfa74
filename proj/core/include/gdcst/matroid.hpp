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

#ifndef GDCST_MATROID_HPP_
#define GDCST_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gdcst/graph.hpp"

namespace gdcst {

using Element = int;

// Independence oracle over the ground set 0..ground_size()-1. Subsets passed
// to is_independent hold distinct in-range elements, in any order.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const Element> subset) const = 0;
  virtual std::optional<int> rank_hint() const { return std::nullopt; }
};

// Ground element i is edge i of the multigraph. Loops are dependent.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Multigraph graph);

  int ground_size() const override {
    return static_cast<int>(graph_.edges.size());
  }
  bool is_independent(std::span<const Element> subset) const override;

  const Multigraph& graph() const { return graph_; }

 private:
  Multigraph graph_;
};

// Blocks are disjoint; an element outside every block is never limited.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(int ground_size, std::vector<std::vector<Element>> blocks,
                   std::vector<int> capacities);

  int ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const Element> subset) const override;

  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  int ground_size_;
  std::vector<std::vector<Element>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// Every subset independent.
class FreeMatroid final : public Matroid {
 public:
  explicit FreeMatroid(int ground_size) : ground_size_(ground_size) {}

  int ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const Element>) const override { return true; }
  std::optional<int> rank_hint() const override { return ground_size_; }

 private:
  int ground_size_;
};

// Caller-supplied predicate; the caller is responsible for the axioms.
class OracleMatroid final : public Matroid {
 public:
  using Predicate = std::function<bool(std::span<const Element>)>;

  OracleMatroid(int ground_size, Predicate predicate)
      : ground_size_(ground_size), predicate_(std::move(predicate)) {}

  int ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const Element> subset) const override {
    return predicate_(subset);
  }

 private:
  int ground_size_;
  Predicate predicate_;
};

bool graphic_independent(const GraphicMatroid& matroid,
                         std::span<const Element> subset);
bool partition_independent(const PartitionMatroid& matroid,
                           std::span<const Element> subset);

struct IntersectionStats {
  std::int64_t oracle_calls = 0;
  int augmentations = 0;
};

// Maximum-cardinality common independent set (sorted), by repeated
// shortest augmenting paths in the exchange graph.
std::vector<Element> max_common_independent(const Matroid& m1,
                                            const Matroid& m2,
                                            IntersectionStats* stats = nullptr);

// Minimum-weight common independent set of exactly `size` elements, or
// nullopt when no common independent set has that many elements.
std::optional<std::vector<Element>> min_weight_common_independent_of_size(
    const Matroid& m1, const Matroid& m2, std::span<const Weight> weights,
    int size, IntersectionStats* stats = nullptr);

}  // namespace gdcst

#endif  // GDCST_MATROID_HPP_
