#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "linedi/digraph.hpp"

namespace linedi {

/// Invariants compared when exhaustive search is out of reach.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> degrees;  // (in, out, loops), sorted
  std::vector<std::pair<std::size_t, bool>> scc_profile;                   // (size, is cycle), sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const Digraph& g) {
  Fingerprint f;
  f.order = g.order();
  f.size = g.size();
  std::vector<std::size_t> in(g.order(), 0), out(g.order(), 0), loops(g.order(), 0);
  for (const Arc& a : g.arcs()) {
    ++out[a.tail];
    ++in[a.head];
    if (a.tail == a.head) ++loops[a.tail];
  }
  for (Vertex v = 0; v < g.order(); ++v) f.degrees.emplace_back(in[v], out[v], loops[v]);
  std::sort(f.degrees.begin(), f.degrees.end());
  const auto d = scc(g);
  for (std::size_t i = 0; i < d.count(); ++i) f.scc_profile.emplace_back(d.components[i].size(), d.is_directed_cycle[i]);
  std::sort(f.scc_profile.begin(), f.scc_profile.end());
  return f;
}

struct IsomorphismResult {
  bool isomorphic = false;
  bool exact = false;  // false when only fingerprints were compared
};

inline constexpr std::size_t kExhaustiveIsomorphismLimit = 8;

/// Exhaustive search (with degree pruning) up to kExhaustiveIsomorphismLimit
/// vertices; fingerprint comparison beyond.
inline IsomorphismResult check_isomorphic(const Digraph& a, const Digraph& b) {
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb)) return {false, true};
  const std::size_t n = a.order();
  if (n > kExhaustiveIsomorphismLimit) return {true, false};

  std::vector<std::size_t> ma(n * n, 0), mb(n * n, 0);
  for (const Arc& x : a.arcs()) ++ma[x.tail * n + x.head];
  for (const Arc& x : b.arcs()) ++mb[x.tail * n + x.head];
  auto signature = [n](const std::vector<std::size_t>& m, std::size_t v) {
    std::size_t in = 0, out = 0;
    for (std::size_t w = 0; w < n; ++w) {
      out += m[v * n + w];
      in += m[w * n + v];
    }
    return std::tuple{in, out, m[v * n + v]};
  };

  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || signature(ma, v) != signature(mb, w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = ma[u * n + v] == mb[map[u] * n + w] && ma[v * n + u] == mb[w * n + map[u]];
      }
      if (!ok) continue;
      used[w] = true;
      map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return {extend(extend, 0), true};
}

}  // namespace linedi
