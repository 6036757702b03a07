#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linedi/bigint.hpp"
#include "linedi/digraph.hpp"
#include "linedi/error.hpp"

namespace linedi {

/// All-pairs shortest-path lengths; -1 marks "no directed path".
class DistanceTable {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const noexcept { return n_; }
  std::optional<std::uint32_t> at(Vertex u, Vertex v) const {
    const auto x = d_.at(u * n_ + v);
    if (x == kUnreachable) return std::nullopt;
    return static_cast<std::uint32_t>(x);
  }
  bool reachable(Vertex u, Vertex v) const { return d_.at(u * n_ + v) != kUnreachable; }
  std::int32_t raw(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::int32_t* row(Vertex u) { return d_.data() + u * n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> d_;
};

namespace detail {

// Unweighted BFS from one source; `dist` must have size n and is overwritten.
inline void bfs_row(const std::vector<std::vector<Vertex>>& succ, Vertex source, std::int32_t* dist,
                    std::vector<Vertex>& queue) {
  const std::size_t n = succ.size();
  std::fill(dist, dist + n, DistanceTable::kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : succ[x]) {
      if (dist[y] == DistanceTable::kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace detail

inline DistanceTable distances(const Digraph& g) {
  const auto succ = successor_lists(g);
  DistanceTable t(g.order());
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) detail::bfs_row(succ, s, t.row(s), queue);
  return t;
}

struct MetricOptions {
  bool include_diagonal = true;  // whether (u,u) pairs count in the mean inner distance
};

struct MetricReport {
  std::size_t order = 0;
  std::size_t inner_diameter = 0;
  std::size_t inner_out_radius = 0;
  std::size_t inner_in_radius = 0;
  std::vector<std::size_t> out_eccentricities;
  std::vector<std::size_t> in_eccentricities;
  Rational mean_inner_distance = 0;
  bool strongly_connected = false;
  bool is_directed_cycle = false;
  std::optional<std::size_t> standard_diameter;  // nullopt when some pair is unreachable
};

/// Inner eccentricities take the maximum over finite distances only; a vertex
/// that reaches (or is reached by) nothing else has eccentricity 0. Rows are
/// streamed, so memory stays linear in the order.
inline MetricReport metric_report(const Digraph& g, MetricOptions opts = {}) {
  if (g.empty()) fail(ErrorKind::EmptyDigraph, "metric report of the empty digraph");
  const std::size_t n = g.order();
  const auto succ = successor_lists(g);
  MetricReport r;
  r.order = n;
  r.out_eccentricities.assign(n, 0);
  r.in_eccentricities.assign(n, 0);
  std::vector<std::int32_t> row(n);
  std::vector<Vertex> queue;
  BigInt sum = 0;
  BigInt pairs = 0;
  bool all_reachable = true;
  for (Vertex u = 0; u < n; ++u) {
    detail::bfs_row(succ, u, row.data(), queue);
    std::uint64_t row_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto d = row[v];
      if (d == DistanceTable::kUnreachable) {
        all_reachable = false;
        continue;
      }
      const auto du = static_cast<std::size_t>(d);
      r.out_eccentricities[u] = std::max(r.out_eccentricities[u], du);
      r.in_eccentricities[v] = std::max(r.in_eccentricities[v], du);
      row_sum += du;
    }
    sum += row_sum;
    pairs += queue.size();  // every reached vertex, u itself included
  }
  if (!opts.include_diagonal) pairs -= n;
  r.inner_diameter = *std::max_element(r.out_eccentricities.begin(), r.out_eccentricities.end());
  r.inner_out_radius = *std::min_element(r.out_eccentricities.begin(), r.out_eccentricities.end());
  r.inner_in_radius = *std::min_element(r.in_eccentricities.begin(), r.in_eccentricities.end());
  r.mean_inner_distance = pairs == 0 ? Rational(0) : Rational(sum, pairs);
  r.strongly_connected = all_reachable;
  r.is_directed_cycle = linedi::is_directed_cycle(g);
  if (all_reachable) r.standard_diameter = r.inner_diameter;
  return r;
}

inline Rational mean_inner_distance(const Digraph& g, MetricOptions opts = {}) {
  return metric_report(g, opts).mean_inner_distance;
}

/// Maximum finite distance; nullopt for the empty digraph.
inline std::optional<std::size_t> inner_diameter(const Digraph& g) {
  if (g.empty()) return std::nullopt;
  const auto succ = successor_lists(g);
  std::vector<std::int32_t> row(g.order());
  std::vector<Vertex> queue;
  std::int32_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    detail::bfs_row(succ, u, row.data(), queue);
    best = std::max(best, row[queue.back()]);  // BFS order: last reached is farthest
  }
  return static_cast<std::size_t>(best);
}

struct DiameterSequence {
  std::vector<std::size_t> terms;     // d(L^0 g), d(L^1 g), ...
  std::optional<std::size_t> empty_at;  // first k with L^k g empty, if reached within K
};

inline DiameterSequence inner_diameter_sequence(const Digraph& g, std::size_t max_k, IterateOptions opts = {}) {
  opts.keep_labels = false;
  DiameterSequence out;
  Digraph cur = g.without_labels();
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (cur.empty()) {
      out.empty_at = k;
      break;
    }
    out.terms.push_back(*inner_diameter(cur));
    if (k == max_k) break;
    cur = line_iterate(cur, 1, opts).digraph;
  }
  return out;
}

enum class BehaviorKind { VanishesAt, EventuallyPeriodic, Unbounded };

struct Behavior {
  BehaviorKind kind = BehaviorKind::EventuallyPeriodic;
  std::size_t vanish_index = 0;  // h with L^h g made of isolated vertices; VanishesAt only

  friend bool operator==(const Behavior&, const Behavior&) = default;
};

inline std::string to_string(const Behavior& b) {
  switch (b.kind) {
    case BehaviorKind::VanishesAt: return "VanishesAt(" + std::to_string(b.vanish_index) + ")";
    case BehaviorKind::EventuallyPeriodic: return "EventuallyPeriodic";
    case BehaviorKind::Unbounded: return "Unbounded";
  }
  return "?";
}

/// Long-run behaviour of the iterated line digraphs, read off the strong
/// components: any nontrivial component that is not a cycle makes them grow
/// without bound; no nontrivial component at all makes them vanish.
inline Behavior classify_behavior(const Digraph& g) {
  if (g.empty()) fail(ErrorKind::EmptyDigraph, "classify_behavior of the empty digraph");
  const auto d = scc(g);
  bool any_nontrivial = false;
  for (std::size_t i = 0; i < d.count(); ++i) {
    if (d.is_trivial[i]) continue;
    any_nontrivial = true;
    if (!d.is_directed_cycle[i]) return {BehaviorKind::Unbounded, 0};
  }
  if (!any_nontrivial) return {BehaviorKind::VanishesAt, longest_path_length(g)};
  return {BehaviorKind::EventuallyPeriodic, 0};
}

}  // namespace linedi
