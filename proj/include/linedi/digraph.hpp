#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linedi/error.hpp"

namespace linedi {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite directed multigraph. Loops and parallel arcs are allowed; the arc
/// list order is significant because arc i becomes vertex i of the line
/// digraph. Values are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  static Digraph build(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels = {},
                       std::string name = {}) {
    if (n > std::numeric_limits<Vertex>::max()) fail(ErrorKind::IndexOutOfRange, "vertex count too large");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].tail >= n || arcs[i].head >= n) {
        fail(ErrorKind::IndexOutOfRange, "arc " + std::to_string(i) + " (" + std::to_string(arcs[i].tail) +
                                              "," + std::to_string(arcs[i].head) + ") outside [0," +
                                              std::to_string(n) + ")");
      }
    }
    if (!labels.empty()) {
      if (labels.size() != n) {
        fail(ErrorKind::LabelCountMismatch,
             std::to_string(labels.size()) + " labels for " + std::to_string(n) + " vertices");
      }
      std::unordered_set<std::string_view> seen;
      seen.reserve(labels.size());
      for (const auto& l : labels) {
        if (!seen.insert(l).second) fail(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
      }
    }
    Digraph g;
    g.n_ = n;
    g.arcs_ = std::move(arcs);
    g.labels_ = std::move(labels);
    g.name_ = std::move(name);
    return g;
  }

  static Digraph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
    std::vector<Arc> list;
    list.reserve(arcs.size());
    for (auto [t, h] : arcs) list.push_back({t, h});
    return build(n, std::move(list));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  const std::string& name() const noexcept { return name_; }
  Digraph with_name(std::string name) const {
    Digraph g = *this;
    g.name_ = std::move(name);
    return g;
  }
  Digraph without_labels() const {
    Digraph g;
    g.n_ = n_;
    g.arcs_ = arcs_;
    g.name_ = name_;
    return g;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Compressed in/out incidence lists. Arc indices inside each vertex's list
/// keep the digraph's arc order.
struct Adjacency {
  std::vector<std::size_t> out_offset, in_offset;
  std::vector<std::uint32_t> out_arcs, in_arcs;

  explicit Adjacency(const Digraph& g) {
    const std::size_t n = g.order();
    out_offset.assign(n + 1, 0);
    in_offset.assign(n + 1, 0);
    for (const Arc& a : g.arcs()) {
      ++out_offset[a.tail + 1];
      ++in_offset[a.head + 1];
    }
    std::partial_sum(out_offset.begin(), out_offset.end(), out_offset.begin());
    std::partial_sum(in_offset.begin(), in_offset.end(), in_offset.begin());
    out_arcs.resize(g.size());
    in_arcs.resize(g.size());
    auto out_fill = out_offset;
    auto in_fill = in_offset;
    const auto arcs = g.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      out_arcs[out_fill[arcs[i].tail]++] = static_cast<std::uint32_t>(i);
      in_arcs[in_fill[arcs[i].head]++] = static_cast<std::uint32_t>(i);
    }
  }

  std::span<const std::uint32_t> out(Vertex v) const {
    return {out_arcs.data() + out_offset[v], out_offset[v + 1] - out_offset[v]};
  }
  std::span<const std::uint32_t> in(Vertex v) const {
    return {in_arcs.data() + in_offset[v], in_offset[v + 1] - in_offset[v]};
  }
  std::size_t out_degree(Vertex v) const { return out_offset[v + 1] - out_offset[v]; }
  std::size_t in_degree(Vertex v) const { return in_offset[v + 1] - in_offset[v]; }
};

/// Plain successor lists (heads only, with multiplicity), used by the BFS code.
inline std::vector<std::vector<Vertex>> successor_lists(const Digraph& g) {
  std::vector<std::vector<Vertex>> succ(g.order());
  for (const Arc& a : g.arcs()) succ[a.tail].push_back(a.head);
  return succ;
}

/// |E(L(g))| = sum over v of indeg(v) * outdeg(v).
inline std::uint64_t line_arc_count(const Digraph& g) {
  std::vector<std::uint64_t> in(g.order(), 0), out(g.order(), 0);
  for (const Arc& a : g.arcs()) {
    ++out[a.tail];
    ++in[a.head];
  }
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) total += in[v] * out[v];
  return total;
}

namespace detail {

// Overlap labelling applies when every label has the same length l and every
// arc joins words overlapping in l-1 letters.
inline bool labels_overlap(const Digraph& g) {
  if (!g.has_labels() || g.order() == 0) return false;
  const std::size_t len = g.label(0).size();
  if (len == 0) return false;
  for (const auto& l : g.labels()) {
    if (l.size() != len) return false;
  }
  for (const Arc& a : g.arcs()) {
    const std::string& t = g.label(a.tail);
    const std::string& h = g.label(a.head);
    if (t.compare(1, len - 1, h, 0, len - 1) != 0) return false;
  }
  return true;
}

inline std::vector<std::string> line_labels(const Digraph& g) {
  std::vector<std::string> out;
  out.reserve(g.size());
  const bool overlap = labels_overlap(g);
  for (const Arc& a : g.arcs()) {
    if (overlap) {
      out.push_back(g.label(a.tail) + g.label(a.head).back());
    } else {
      out.push_back(g.label(a.tail) + "|" + g.label(a.head));
    }
  }
  // Parallel arcs would collide; later copies get an ordinal suffix.
  std::unordered_set<std::string> seen;
  seen.reserve(out.size());
  for (auto& l : out) {
    if (seen.insert(l).second) continue;
    for (std::size_t k = 2;; ++k) {
      std::string candidate = l + "~" + std::to_string(k);
      if (seen.insert(candidate).second) {
        l = std::move(candidate);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

struct LineOptions {
  bool keep_labels = true;
};

/// The line digraph: vertex i is arc i of g, and arc i -> arc j whenever the
/// head of i is the tail of j (a loop is adjacent to itself).
inline Digraph line(const Digraph& g, LineOptions opts = {}) {
  const Adjacency adj(g);
  const std::uint64_t total = line_arc_count(g);
  if (g.size() > std::numeric_limits<Vertex>::max()) fail(ErrorKind::ResourceLimit, "line digraph too large");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(total));
  const auto garcs = g.arcs();
  for (std::size_t i = 0; i < garcs.size(); ++i) {
    for (std::uint32_t j : adj.out(garcs[i].head)) arcs.push_back({static_cast<Vertex>(i), j});
  }
  std::vector<std::string> labels;
  if (opts.keep_labels && g.has_labels()) labels = detail::line_labels(g);
  return Digraph::build(g.size(), std::move(arcs), std::move(labels),
                        g.name().empty() ? std::string{} : "L(" + g.name() + ")");
}

struct IterateOptions {
  std::uint64_t vertex_cap = 10'000'000;
  std::uint64_t arc_cap = 50'000'000;
  bool keep_labels = true;
};

struct LineIteration {
  Digraph digraph;
  std::vector<std::uint64_t> orders;  // n_0 .. n_k
};

/// L^k(g) together with the orders of every iterate.
inline LineIteration line_iterate(const Digraph& g, std::size_t k, IterateOptions opts = {}) {
  LineIteration result;
  result.digraph = opts.keep_labels ? g : g.without_labels();
  result.orders.push_back(g.order());
  for (std::size_t step = 0; step < k; ++step) {
    const Digraph& cur = result.digraph;
    if (cur.size() > opts.vertex_cap) {
      fail(ErrorKind::ResourceLimit, "order of iterate " + std::to_string(step + 1) + " is " +
                                         std::to_string(cur.size()) + ", cap " + std::to_string(opts.vertex_cap));
    }
    const std::uint64_t next_arcs = line_arc_count(cur);
    if (next_arcs > opts.arc_cap) {
      fail(ErrorKind::ResourceLimit, "size of iterate " + std::to_string(step + 1) + " is " +
                                         std::to_string(next_arcs) + " arcs, cap " + std::to_string(opts.arc_cap));
    }
    result.digraph = line(cur, {opts.keep_labels});
    result.orders.push_back(result.digraph.order());
  }
  return result;
}

/// Reverse every arc; arc order and labels are kept.
inline Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return Digraph::build(g.order(), std::move(arcs), std::move(labels), g.name());
}

/// Subdigraph induced by the vertices with keep[v] set; surviving vertices and
/// arcs retain their relative order.
inline Digraph induced_subdigraph(const Digraph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.order()) fail(ErrorKind::DimensionMismatch, "keep mask size");
  std::vector<Vertex> remap(g.order(), std::numeric_limits<Vertex>::max());
  Vertex next = 0;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    remap[v] = next++;
    if (g.has_labels()) labels.push_back(g.label(v));
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (keep[a.tail] && keep[a.head]) arcs.push_back({remap[a.tail], remap[a.head]});
  }
  return Digraph::build(next, std::move(arcs), std::move(labels), g.name());
}

struct SccDecomposition {
  std::vector<std::size_t> component_of;
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> is_trivial;         // one vertex, no loop
  std::vector<bool> is_directed_cycle;  // every member has exactly one in- and one out-arc inside

  std::size_t count() const { return components.size(); }
  std::size_t nontrivial_count() const {
    return static_cast<std::size_t>(std::count(is_trivial.begin(), is_trivial.end(), false));
  }
};

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation.
inline SccDecomposition scc(const Digraph& g) {
  const std::size_t n = g.order();
  const auto succ = successor_lists(g);
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  SccDecomposition out;
  out.component_of.assign(n, 0);
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ[f.v].size()) {
        const Vertex w = succ[f.v][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component_of[w] = out.components.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    }
  }

  const std::size_t c = out.components.size();
  std::vector<std::size_t> internal_arcs(c, 0);
  std::vector<std::size_t> in_inside(n, 0), out_inside(n, 0);
  for (const Arc& a : g.arcs()) {
    if (out.component_of[a.tail] != out.component_of[a.head]) continue;
    ++internal_arcs[out.component_of[a.tail]];
    ++out_inside[a.tail];
    ++in_inside[a.head];
  }
  out.is_trivial.assign(c, false);
  out.is_directed_cycle.assign(c, false);
  for (std::size_t i = 0; i < c; ++i) {
    const auto& comp = out.components[i];
    if (internal_arcs[i] == 0) {
      out.is_trivial[i] = true;
      continue;
    }
    out.is_directed_cycle[i] = std::all_of(comp.begin(), comp.end(), [&](Vertex v) {
      return in_inside[v] == 1 && out_inside[v] == 1;
    });
  }
  return out;
}

inline bool is_strongly_connected(const Digraph& g) { return g.order() > 0 && scc(g).count() == 1; }

/// No loop and no nontrivial strong component.
inline bool is_acyclic(const Digraph& g) { return scc(g).nontrivial_count() == 0; }

/// The whole digraph is one directed cycle (C_1 is a single loop).
inline bool is_directed_cycle(const Digraph& g) {
  if (g.order() == 0) return false;
  const auto d = scc(g);
  return d.count() == 1 && d.is_directed_cycle[0];
}

/// Number of arcs on a longest directed path of an acyclic digraph.
inline std::size_t longest_path_length(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n, 0);
  for (const Arc& a : g.arcs()) {
    if (a.tail == a.head) fail(ErrorKind::NotAcyclic, "loop at vertex " + std::to_string(a.tail));
    ++indeg[a.head];
  }
  const auto succ = successor_lists(g);
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t processed = 0, longest = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++processed;
    longest = std::max(longest, depth[v]);
    for (Vertex w : succ[v]) {
      depth[w] = std::max(depth[w], depth[v] + 1);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (processed != n) fail(ErrorKind::NotAcyclic, "digraph contains a directed cycle");
  return longest;
}

}  // namespace linedi
