#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linedi/digraph.hpp"
#include "linedi/error.hpp"

namespace linedi {

inline constexpr std::size_t kMaxAlphabet = 36;

inline char symbol_char(std::size_t s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

/// Inverse of symbol_char; nullopt for characters outside 0-9a-z.
inline std::optional<std::size_t> symbol_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::size_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::size_t>(c - 'a' + 10);
  return std::nullopt;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::ParamOutOfRange, what);
}

// Guard against label sets that cannot fit in memory.
inline void require_word_budget(std::size_t alphabet, std::size_t length) {
  require(alphabet >= 1 && alphabet <= kMaxAlphabet, "alphabet size must be in [1," + std::to_string(kMaxAlphabet) + "]");
  double total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= static_cast<double>(alphabet);
  require(total <= 5e7, "too many words: " + std::to_string(alphabet) + "^" + std::to_string(length));
}

/// All length-`length` words over the first `alphabet` symbols accepted by
/// `keep`, in lexicographic order.
inline std::vector<std::string> enumerate_words(std::size_t alphabet, std::size_t length,
                                                const std::function<bool(std::string_view)>& keep) {
  require_word_budget(alphabet, length);
  std::vector<std::string> out;
  std::vector<std::size_t> digits(length, 0);
  std::string word(length, symbol_char(0));
  while (true) {
    if (keep(word)) out.push_back(word);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet) {
        word[i] = symbol_char(digits[i]);
        break;
      }
      digits[i] = 0;
      word[i] = symbol_char(0);
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

/// Shift digraph on a word set: a_1..a_l -> a_2..a_l x for every symbol x
/// (in increasing order) such that the target is a vertex and `arc_ok(word, x)`.
inline Digraph shift_digraph(std::vector<std::string> words, std::size_t alphabet,
                             const std::function<bool(std::string_view, char)>& arc_ok, std::string name) {
  std::unordered_map<std::string, Vertex> index;
  index.reserve(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<Vertex>(i));
  std::vector<Arc> arcs;
  std::string target;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w.empty()) continue;
    target.assign(w, 1, std::string::npos);
    target.push_back('0');
    for (std::size_t s = 0; s < alphabet; ++s) {
      const char x = symbol_char(s);
      target.back() = x;
      auto it = index.find(target);
      if (it == index.end() || !arc_ok(w, x)) continue;
      arcs.push_back({static_cast<Vertex>(i), it->second});
    }
  }
  const std::size_t n = words.size();
  return Digraph::build(n, std::move(arcs), std::move(words), std::move(name));
}

inline bool no_adjacent_repeat(std::string_view w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) return false;
  }
  return true;
}

inline std::string family_name(std::string_view tag, std::size_t a, std::size_t b) {
  return std::string(tag) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

/// True when w contains no factor uu with 1 <= |u| <= max_half.
inline bool avoids_squares(std::string_view w, std::size_t max_half) {
  for (std::size_t half = 1; half <= max_half; ++half) {
    for (std::size_t i = 0; i + 2 * half <= w.size(); ++i) {
      if (w.compare(i, half, w, i + half, half) == 0) return false;
    }
  }
  return true;
}

/// B(sigma, n): all words of length n, arcs by one-symbol shift.
inline Digraph de_bruijn(std::size_t sigma, std::size_t n) {
  detail::require(sigma >= 1, "de_bruijn: sigma >= 1");
  detail::require(n >= 1, "de_bruijn: n >= 1");
  auto words = detail::enumerate_words(sigma, n, [](std::string_view) { return true; });
  return detail::shift_digraph(std::move(words), sigma, [](std::string_view, char) { return true; },
                               detail::family_name("B", sigma, n));
}

/// K(d, l): words over d+1 symbols with no two equal consecutive letters.
inline Digraph kautz(std::size_t d, std::size_t l) {
  detail::require(d >= 1, "kautz: d >= 1");
  detail::require(l >= 1, "kautz: l >= 1");
  auto words = detail::enumerate_words(d + 1, l, detail::no_adjacent_repeat);
  return detail::shift_digraph(std::move(words), d + 1, [](std::string_view w, char x) { return x != w.back(); },
                               detail::family_name("K", d, l));
}

/// CK(d, l): Kautz words with a_1 != a_l; arc when a_{l+1} differs from a_l and a_2.
inline Digraph cyclic_kautz(std::size_t d, std::size_t l) {
  detail::require(d >= 2, "cyclic_kautz: d >= 2");
  detail::require(l >= 3, "cyclic_kautz: l >= 3");
  auto words = detail::enumerate_words(d + 1, l, [](std::string_view w) {
    return detail::no_adjacent_repeat(w) && w.front() != w.back();
  });
  return detail::shift_digraph(std::move(words), d + 1,
                               [](std::string_view w, char x) { return x != w.back() && x != w[1]; },
                               detail::family_name("CK", d, l));
}

/// sK(d, l): Kautz vertex set; arc when a_{l+1} differs from a_1 and a_l.
inline Digraph sub_kautz(std::size_t d, std::size_t l) {
  detail::require(d >= 2, "sub_kautz: d >= 2");
  detail::require(l >= 2, "sub_kautz: l >= 2");
  auto words = detail::enumerate_words(d + 1, l, detail::no_adjacent_repeat);
  return detail::shift_digraph(std::move(words), d + 1,
                               [](std::string_view w, char x) { return x != w.front() && x != w.back(); },
                               detail::family_name("sK", d, l));
}

/// SF(d, l): induced subdigraph of B(d+1, l) on words with no square uu,
/// |u| <= floor(l/2).
inline Digraph square_free(std::size_t d, std::size_t l) {
  detail::require(d >= 1, "square_free: d >= 1");
  detail::require(l >= 2, "square_free: l >= 2");
  const std::size_t half = l / 2;
  auto words = detail::enumerate_words(d + 1, l, [half](std::string_view w) { return avoids_squares(w, half); });
  return detail::shift_digraph(std::move(words), d + 1, [](std::string_view, char) { return true; },
                               detail::family_name("SF", d, l));
}

/// C_n^*: the cycle 0 -> 1 -> ... -> n-1 -> 0 plus the chords 0 -> j, 2 <= j <= n-1.
inline Digraph star_cycle(std::size_t n) {
  detail::require(n >= 3, "star_cycle: n >= 3");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  for (std::size_t j = 2; j < n; ++j) arcs.push_back({0, static_cast<Vertex>(j)});
  return Digraph::build(n, std::move(arcs), {}, "C" + std::to_string(n) + "*");
}

/// G_{n,2}: the cycle v_0..v_{n-1}, a source w = n with w -> v_0 and a sink
/// z = n+1 with v_0 -> z.
inline Digraph pendant_cycle(std::size_t n) {
  detail::require(n >= 1, "pendant_cycle: n >= 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  const auto w = static_cast<Vertex>(n), z = static_cast<Vertex>(n + 1);
  arcs.push_back({w, 0});
  arcs.push_back({0, z});
  return Digraph::build(n + 2, std::move(arcs), {}, "G(" + std::to_string(n) + ",2)");
}

/// G_{n,d}: cycle vertices 0..n-1, vertex i -> its tree centre n+i, and each
/// centre -> its d leaves (numbered from 2n).
inline Digraph unicyclic(std::size_t n, std::size_t d) {
  detail::require(n >= 1, "unicyclic: n >= 1");
  detail::require(d >= 1, "unicyclic: d >= 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n + i)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      arcs.push_back({static_cast<Vertex>(n + i), static_cast<Vertex>(2 * n + i * d + j)});
    }
  }
  return Digraph::build(n * (d + 2), std::move(arcs), {}, detail::family_name("G", n, d));
}

/// A strongly connected digraph with inner out-radius r1 and inner in-radius r2.
/// r1 < r2: L^{r1-1}(C_n^*) with n = 2(r2-r1)+3. r1 == r2: B(2, r1), where
/// every vertex has both eccentricities equal to r1. r1 > r2: the converse.
inline Digraph radii_digraph(std::size_t r1, std::size_t r2, IterateOptions opts = {}) {
  detail::require(r1 >= 1 && r2 >= 1, "radii_digraph: radii must be positive");
  if (r1 > r2) {
    return converse(radii_digraph(r2, r1, opts)).with_name("radii(" + std::to_string(r1) + "," + std::to_string(r2) + ")");
  }
  const std::string name = "radii(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
  if (r1 == r2) return de_bruijn(2, r1).without_labels().with_name(name);
  opts.keep_labels = false;
  return line_iterate(star_cycle(2 * (r2 - r1) + 3), r1 - 1, opts).digraph.with_name(name);
}

enum class Family { DeBruijn, Kautz, CyclicKautz, SubKautz, SquareFree, StarCycle, PendantCycle, Unicyclic };

struct FamilySpec {
  Family family = Family::DeBruijn;
  std::size_t a = 0;  // sigma or d, or n for the single-parameter families
  std::size_t b = 0;  // word length l or n; d for Unicyclic
};

inline Digraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::DeBruijn: return de_bruijn(spec.a, spec.b);
    case Family::Kautz: return kautz(spec.a, spec.b);
    case Family::CyclicKautz: return cyclic_kautz(spec.a, spec.b);
    case Family::SubKautz: return sub_kautz(spec.a, spec.b);
    case Family::SquareFree: return square_free(spec.a, spec.b);
    case Family::StarCycle: return star_cycle(spec.a);
    case Family::PendantCycle: return pendant_cycle(spec.a);
    case Family::Unicyclic: return unicyclic(spec.a, spec.b);
  }
  fail(ErrorKind::ParamOutOfRange, "unknown family");
}

}  // namespace linedi
