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

#ifndef GDCST_SRC_GRAPH_ALGOS_HPP_
#define GDCST_SRC_GRAPH_ALGOS_HPP_

#include <vector>

#include "gdcst/graph.hpp"

namespace gdcst::detail {

struct BridgeScan {
  bool connected = false;
  std::vector<EdgeId> bridges;  // unsorted
};

// Bridges of the spanning subgraph made of the active edges.
BridgeScan scan_bridges(const Graph& graph,
                        const std::vector<std::vector<EdgeId>>& incidence,
                        const std::vector<bool>& active);

}  // namespace gdcst::detail

#endif  // GDCST_SRC_GRAPH_ALGOS_HPP_
