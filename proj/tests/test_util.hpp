#pragma once

#include <random>
#include <string>
#include <vector>

#include "linedi.hpp"

namespace testutil {

using linedi::Arc;
using linedi::BigInt;
using linedi::Digraph;
using linedi::Vertex;

inline std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<BigInt> big(const std::vector<long long>& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline Digraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({Vertex(i), Vertex((i + 1) % n)});
  return Digraph::build(n, arcs);
}

inline Digraph path(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) arcs.push_back({Vertex(i), Vertex(i + 1)});
  return Digraph::build(n, arcs);
}

// u, v, w, x = 0..3 with arcs uv, vw, wx, vu, wu, xu.
inline Digraph uvwx() { return Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}, {2, 0}, {3, 0}}); }

// B(2,3) minus 000, 001, 010, 100.
inline Digraph narayana_digraph() {
  return linedi::forbidden_word_digraph({2, 3, {"000", "001", "010", "100"}});
}

/// n vertices, each ordered pair (loops included) an arc with probability p.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p, bool loops = true) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v && !loops) continue;
      if (coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph::build(n, arcs);
}

/// Random DAG: arcs only from lower to higher index, then vertices shuffled.
inline Digraph random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) arcs.push_back({perm[u], perm[v]});
    }
  }
  return Digraph::build(n, arcs);
}

/// Every digraph on n vertices without parallel arcs (loops allowed), as bit masks.
inline Digraph from_mask(std::size_t n, unsigned long long mask) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (mask >> i & 1ULL) arcs.push_back({Vertex(i / n), Vertex(i % n)});
  }
  return Digraph::build(n, arcs);
}

}  // namespace testutil
