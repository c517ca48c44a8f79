// Copyright 2026 The voting-persuasion Authors
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

#include "persuasion/transportation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "persuasion/errors.h"

namespace persuasion {

namespace {

class MinCostFlow {
 public:
  explicit MinCostFlow(int num_nodes) : head_(num_nodes, -1) {}

  int AddArc(int from, int to, int capacity, double cost) {
    arcs_.push_back({to, head_[from], capacity, cost});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, -cost});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  // Pushes up to `limit` units from source to sink along successive
  // Bellman-Ford shortest paths. Returns the amount sent.
  int Run(int source, int sink, int limit) {
    const int n = static_cast<int>(head_.size());
    int sent = 0;
    std::vector<double> dist(n);
    std::vector<int> via(n);
    std::vector<char> queued(n);
    std::vector<int> queue;
    while (sent < limit) {
      std::fill(dist.begin(), dist.end(),
                std::numeric_limits<double>::infinity());
      std::fill(via.begin(), via.end(), -1);
      std::fill(queued.begin(), queued.end(), 0);
      dist[source] = 0.0;
      queue.assign(1, source);
      queued[source] = 1;
      // SPFA; the residual graph has no negative cycles under SSP.
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        queued[u] = 0;
        for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.capacity <= 0) continue;
          const double nd = dist[u] + arc.cost;
          if (nd < dist[arc.to] - 1e-12) {
            dist[arc.to] = nd;
            via[arc.to] = a;
            if (!queued[arc.to]) {
              queued[arc.to] = 1;
              queue.push_back(arc.to);
            }
          }
        }
      }
      if (via[sink] < 0) break;
      int bottleneck = limit - sent;
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        bottleneck = std::min(bottleneck, arcs_[via[v]].capacity);
      }
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= bottleneck;
        arcs_[via[v] ^ 1].capacity += bottleneck;
      }
      sent += bottleneck;
    }
    return sent;
  }

  int Flow(int arc) const { return arcs_[arc ^ 1].capacity; }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
    double cost;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::optional<Assignment> SolveTransportation(const TransportationProblem& t) {
  const int num_r = t.num_receivers();
  const int num_c = t.num_candidates();
  if (num_c < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "transportation problem needs at least one candidate");
  }
  for (const auto& row : t.weight) {
    if (static_cast<int>(row.size()) != num_c) {
      throw Error(ErrorCode::kInvalidArgument,
                  "transportation weight row length mismatch");
    }
    for (double w : row) {
      if (!std::isfinite(w)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "transportation weights must be finite");
      }
    }
  }
  int exact_total = 0;
  long long cap_total = 0;
  for (const auto& col : t.columns) {
    if (col.count < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "transportation column counts must be nonnegative");
    }
    cap_total += col.count;
    if (col.kind == ColumnRequirement::Kind::kExact) exact_total += col.count;
  }
  if (exact_total > num_r || cap_total < num_r) return std::nullopt;

  // Nodes: source, receivers, candidates, free sink, super sink. Exact
  // columns drain straight into the super sink, the free sink carries the
  // remaining |R| - sum(exact) units, so a flow of |R| saturates every exact
  // column.
  const int source = 0;
  const int first_receiver = 1;
  const int first_candidate = first_receiver + num_r;
  const int free_sink = first_candidate + num_c;
  const int super_sink = free_sink + 1;
  MinCostFlow flow(super_sink + 1);
  std::vector<std::vector<int>> assign_arc(num_r, std::vector<int>(num_c));
  for (int r = 0; r < num_r; ++r) {
    flow.AddArc(source, first_receiver + r, 1, 0.0);
    for (int c = 0; c < num_c; ++c) {
      assign_arc[r][c] =
          flow.AddArc(first_receiver + r, first_candidate + c, 1, -t.weight[r][c]);
    }
  }
  for (int c = 0; c < num_c; ++c) {
    const auto& col = t.columns[c];
    if (col.kind == ColumnRequirement::Kind::kExact) {
      flow.AddArc(first_candidate + c, super_sink, col.count, 0.0);
    } else {
      flow.AddArc(first_candidate + c, free_sink, col.count, 0.0);
    }
  }
  flow.AddArc(free_sink, super_sink, num_r - exact_total, 0.0);

  if (flow.Run(source, super_sink, num_r) < num_r) return std::nullopt;

  Assignment result;
  result.profile.assign(num_r, -1);
  for (int r = 0; r < num_r; ++r) {
    for (int c = 0; c < num_c; ++c) {
      if (flow.Flow(assign_arc[r][c]) == 1) {
        result.profile[r] = c;
        result.value += t.weight[r][c];
      }
    }
  }
  return result;
}

}  // namespace persuasion
