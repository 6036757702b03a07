#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linedi/bigint.hpp"
#include "linedi/digraph.hpp"
#include "linedi/error.hpp"
#include "linedi/exactla.hpp"
#include "linedi/families.hpp"
#include "linedi/metrics.hpp"
#include "linedi/oeis.hpp"

namespace linedi {

// ---------------------------------------------------------------------------
// Forbidden subwords

struct ForbiddenWordSpec {
  std::size_t sigma = 2;
  std::size_t window = 1;  // length of the vertex words
  std::vector<std::string> forbidden;

  std::string describe() const {
    std::string out = "B(" + std::to_string(sigma) + "," + std::to_string(window) + ")";
    if (forbidden.empty()) return out;
    out += " minus {";
    for (std::size_t i = 0; i < forbidden.size(); ++i) out += (i ? "," : "") + forbidden[i];
    return out + "}";
  }
};

inline void validate(const ForbiddenWordSpec& spec) {
  if (spec.sigma < 1 || spec.sigma > kMaxAlphabet) {
    fail(ErrorKind::InvalidSpec, "alphabet size must be in [1," + std::to_string(kMaxAlphabet) + "]");
  }
  if (spec.window < 1) fail(ErrorKind::InvalidSpec, "word length must be positive");
  for (const auto& w : spec.forbidden) {
    if (w.empty() || w.size() > spec.window) {
      fail(ErrorKind::InvalidSpec, "forbidden word '" + w + "' must have length 1.." + std::to_string(spec.window));
    }
    for (char c : w) {
      const auto v = symbol_value(c);
      if (!v || *v >= spec.sigma) {
        fail(ErrorKind::InvalidSpec, "forbidden word '" + w + "' uses a symbol outside the alphabet of size " +
                                         std::to_string(spec.sigma));
      }
    }
  }
}

inline bool avoids_all(std::string_view word, const std::vector<std::string>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [word](const std::string& f) { return word.find(f) != std::string_view::npos; });
}

/// Induced subdigraph of B(sigma, window) on the words containing no forbidden factor.
inline Digraph forbidden_word_digraph(const ForbiddenWordSpec& spec) {
  validate(spec);
  auto words = detail::enumerate_words(spec.sigma, spec.window,
                                       [&](std::string_view w) { return avoids_all(w, spec.forbidden); });
  return detail::shift_digraph(std::move(words), spec.sigma, [](std::string_view, char) { return true; },
                               spec.describe());
}

/// Induced subdigraph on the vertices whose label has no forbidden factor.
inline Digraph remove_words(const Digraph& g, const std::vector<std::string>& forbidden) {
  if (!g.has_labels()) fail(ErrorKind::InvalidSpec, "remove_words needs a labeled digraph");
  std::vector<bool> keep(g.order());
  for (Vertex v = 0; v < g.order(); ++v) keep[v] = avoids_all(g.label(v), forbidden);
  std::string name = g.name() + " minus {";
  for (std::size_t i = 0; i < forbidden.size(); ++i) name += (i ? "," : "") + forbidden[i];
  return induced_subdigraph(g, keep).with_name(name + "}");
}

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 28;

/// Number of length-`length` words over sigma symbols avoiding every forbidden
/// factor, by enumerating all sigma^length words.
inline BigInt count_avoiding_words(std::size_t sigma, std::size_t length, const std::vector<std::string>& forbidden,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  if (sigma < 1 || sigma > kMaxAlphabet) fail(ErrorKind::InvalidSpec, "alphabet size out of range");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > cap / sigma) {
      fail(ErrorKind::EnumerationCapExceeded, std::to_string(sigma) + "^" + std::to_string(length) +
                                                  " words exceed the enumeration cap " + std::to_string(cap));
    }
    total *= sigma;
  }
  if (total > cap) fail(ErrorKind::EnumerationCapExceeded, "word count exceeds the enumeration cap");
  std::string word(length, symbol_char(0));
  std::vector<std::size_t> digits(length, 0);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (avoids_all(word, forbidden)) ++count;
    for (std::size_t j = length; j-- > 0;) {
      if (++digits[j] < sigma) {
        word[j] = symbol_char(digits[j]);
        break;
      }
      digits[j] = 0;
      word[j] = symbol_char(0);
    }
  }
  return BigInt(count);
}

// ---------------------------------------------------------------------------
// Order sequences

struct SequenceMethods {
  bool direct = true;      // build the iterated line digraphs
  bool walk_count = true;  // s B^k j on the coarsest equitable quotient
  bool recurrence = true;  // minimal polynomial of the quotient, seeded by the first terms
};

struct SequenceOptions {
  SequenceMethods methods;
  std::uint64_t direct_vertex_cap = 2'000'000;  // direct iteration stops past this order
  std::uint64_t oracle_cap = std::uint64_t{1} << 22;
  std::size_t polynomial_order_limit = 400;  // larger digraphs report the quotient's polynomial
};

struct MethodStatus {
  std::string name;
  std::size_t terms = 0;  // how many leading terms the method produced
};

struct Period {
  std::size_t length = 0;
  std::size_t start = 0;  // first index from which the terms repeat
};

struct SequenceReport {
  std::string source;
  std::vector<BigInt> terms;
  std::vector<MethodStatus> methods;
  bool methods_agree = true;
  std::optional<LinearRecurrence> recurrence;
  std::optional<MonicPolynomial> polynomial;
  bool polynomial_of_quotient = false;
  Behavior behavior;
  std::optional<Period> period;
  std::optional<std::size_t> empty_at;
  std::vector<oeis::OeisMatch> oeis_matches;
};

/// Smallest p <= N/3 for which the last 3p terms are p-periodic, with the
/// earliest index from which the repetition holds. Empirical only.
inline std::optional<Period> detect_period(const std::vector<BigInt>& terms) {
  const std::size_t n = terms.size();
  for (std::size_t p = 1; 3 * p <= n; ++p) {
    bool ok = true;
    for (std::size_t i = n - 2 * p; i < n && ok; ++i) ok = terms[i] == terms[i - p];
    if (!ok) continue;
    std::size_t start = n - 3 * p;
    while (start > 0 && terms[start - 1] == terms[start - 1 + p]) --start;
    return Period{p, start};
  }
  return std::nullopt;
}

namespace detail {

[[noreturn]] inline void disagree(std::size_t k, const std::string& a, const BigInt& x, const std::string& b,
                                  const BigInt& y) {
  fail(ErrorKind::MethodDisagreement, "n_" + std::to_string(k) + ": " + a + " gives " + x.str() + ", " + b +
                                          " gives " + y.str());
}

inline void cross_check(const std::vector<BigInt>& a, const std::string& an, const std::vector<BigInt>& b,
                        const std::string& bn) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) disagree(k, an, a[k], bn, b[k]);
  }
}

inline std::vector<BigInt> direct_orders(const Digraph& g, std::size_t max_k, std::uint64_t cap, bool required) {
  std::vector<BigInt> out{BigInt(g.order())};
  Digraph cur = g.without_labels();
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (cur.size() > cap) {
      if (required) {
        fail(ErrorKind::ResourceLimit, "direct iteration: order of L^" + std::to_string(k) + " is " +
                                           std::to_string(cur.size()) + ", cap " + std::to_string(cap));
      }
      break;
    }
    cur = line(cur, {false});
    out.emplace_back(cur.order());
  }
  return out;
}

}  // namespace detail

/// n_0..n_K of the iterated line digraphs by every requested method; the
/// methods must agree wherever they overlap.
inline SequenceReport order_sequence(const Digraph& g, std::size_t max_k, const SequenceOptions& opts = {}) {
  if (g.empty()) fail(ErrorKind::EmptyDigraph, "order sequence of the empty digraph");
  const auto& m = opts.methods;
  if (!m.direct && !m.walk_count && !m.recurrence) fail(ErrorKind::ParamOutOfRange, "no method selected");

  SequenceReport rep;
  rep.source = g.name();
  const bool direct_only = m.direct && !m.walk_count && !m.recurrence;

  std::vector<BigInt> direct, walks, rec_terms;
  if (m.direct) {
    direct = detail::direct_orders(g, max_k, opts.direct_vertex_cap, direct_only);
    rep.methods.push_back({"direct", direct.size()});
  }

  std::optional<EquitablePartition> part;
  if (m.walk_count || m.recurrence) part = coarsest_equitable_partition(g);
  if (m.walk_count) {
    walks = walk_counts(part->quotient, part->sizes, max_k);
    rep.methods.push_back({"walk_count", walks.size()});
  }
  if (m.recurrence) {
    const MonicPolynomial mq = minimal_polynomial(part->quotient);
    const std::size_t r = mq.degree();
    std::vector<BigInt> seed = direct.size() >= r ? direct : walk_counts(part->quotient, part->sizes, r);
    seed.resize(r);
    rec_terms = recurrence_from_polynomial(mq, seed).generate(max_k + 1);
    rep.methods.push_back({"recurrence", rec_terms.size()});
  }

  if (!direct.empty() && !walks.empty()) detail::cross_check(direct, "direct", walks, "walk_count");
  if (!direct.empty() && !rec_terms.empty()) detail::cross_check(direct, "direct", rec_terms, "recurrence");
  if (!walks.empty() && !rec_terms.empty()) detail::cross_check(walks, "walk_count", rec_terms, "recurrence");

  rep.terms = !rec_terms.empty() ? rec_terms : !walks.empty() ? walks : direct;

  if (g.order() <= opts.polynomial_order_limit) {
    rep.polynomial = minimal_polynomial(adjacency_matrix(g));
  } else {
    rep.polynomial = minimal_polynomial((part ? *part : coarsest_equitable_partition(g)).quotient);
    rep.polynomial_of_quotient = true;
  }
  if (rep.terms.size() >= 4) {
    try {
      rep.recurrence = minimal_recurrence(rep.terms);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRecurrenceFound) throw;
    }
  }
  for (std::size_t k = 0; k < rep.terms.size(); ++k) {
    if (rep.terms[k] == 0) {
      rep.empty_at = k;
      break;
    }
  }
  rep.behavior = classify_behavior(g);
  if (rep.behavior.kind == BehaviorKind::EventuallyPeriodic) rep.period = detect_period(rep.terms);
  return rep;
}

/// order_sequence on the forbidden-word digraph, with every term whose word
/// count fits under opts.oracle_cap also checked by enumeration.
inline SequenceReport forbidden_order_sequence(const ForbiddenWordSpec& spec, std::size_t max_k,
                                               const SequenceOptions& opts = {}) {
  const Digraph g = forbidden_word_digraph(spec);
  if (g.empty()) fail(ErrorKind::EmptyDigraph, spec.describe() + " has no vertices");
  SequenceReport rep = order_sequence(g, max_k, opts);
  rep.source = spec.describe();
  std::size_t checked = 0;
  for (std::size_t k = 0; k < rep.terms.size(); ++k) {
    BigInt words;
    try {
      words = count_avoiding_words(spec.sigma, spec.window + k, spec.forbidden, opts.oracle_cap);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::EnumerationCapExceeded) break;
      throw;
    }
    if (words != rep.terms[k]) detail::disagree(k, "word count", words, "line iteration", rep.terms[k]);
    ++checked;
  }
  if (checked > 0) rep.methods.push_back({"oracle", checked});
  return rep;
}

/// Inner diameters d(L^k g), k = 0..K, stopping at the first empty iterate.
inline SequenceReport inner_diameter_report(const Digraph& g, std::size_t max_k, IterateOptions opts = {}) {
  if (g.empty()) fail(ErrorKind::EmptyDigraph, "inner diameter sequence of the empty digraph");
  const auto seq = inner_diameter_sequence(g, max_k, opts);
  SequenceReport rep;
  rep.source = g.name();
  for (auto d : seq.terms) rep.terms.emplace_back(d);
  rep.methods.push_back({"direct", rep.terms.size()});
  rep.empty_at = seq.empty_at;
  rep.behavior = classify_behavior(g);
  if (rep.behavior.kind == BehaviorKind::EventuallyPeriodic) rep.period = detect_period(rep.terms);
  return rep;
}

// ---------------------------------------------------------------------------
// Closed form for CK(d, 4)

/// a + b sqrt(delta) with rational a, b.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational a, Rational b, BigInt delta) : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.delta_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Rational d(x.delta_);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.delta_};
  }
  QuadraticNumber inverse() const {
    const Rational norm = a_ * a_ - b_ * b_ * Rational(delta_);
    if (norm == 0) fail(ErrorKind::Internal, "inverse of zero in Q(sqrt " + delta_.str() + ")");
    return {a_ / norm, -b_ / norm, delta_};
  }
  QuadraticNumber pow(std::size_t e) const {
    QuadraticNumber result{1, 0, delta_}, base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

 private:
  Rational a_, b_;
  BigInt delta_;
};

/// Order of L^k(CK(d,4)) from the closed formula, evaluated exactly in Q(sqrt(d^2-2d+5)).
inline BigInt ck4_closed_form(std::size_t d_in, std::size_t k) {
  if (d_in < 2) fail(ErrorKind::ParamOutOfRange, "ck4_closed_form: d >= 2");
  const BigInt d = d_in;
  const BigInt delta = d * d - 2 * d + 5;
  auto q = [&](const BigInt& a, const BigInt& b) { return QuadraticNumber(Rational(a), Rational(b), delta); };
  const QuadraticNumber p = q(-(d * d * d) - d - 2, d * d + d);
  const QuadraticNumber r = q(d * d * d + d + 2, d * d + d);
  const QuadraticNumber lo = q(1 - d, -1).pow(k + 1).inverse();
  const QuadraticNumber hi = q(1 - d, 1).pow(k + 1).inverse();
  const QuadraticNumber scale(0, Rational(BigInt(1) << k) * Rational(d) / Rational(delta), delta);  // 2^k d / sqrt(delta)
  const QuadraticNumber value = scale * (p * lo + r * hi);
  if (value.surd_part() != 0 || boost::multiprecision::denominator(value.rational_part()) != 1) {
    fail(ErrorKind::Internal, "closed form did not evaluate to an integer");
  }
  return boost::multiprecision::numerator(value.rational_part());
}

// ---------------------------------------------------------------------------
// OEIS annotation

/// Attaches local snapshot matches; fewer terms than the overlap leaves the list empty.
inline void annotate_local(SequenceReport& rep, const oeis::LocalDatabase& db,
                           std::size_t min_overlap = oeis::kDefaultMinOverlap) {
  rep.oeis_matches.clear();
  if (rep.terms.size() < min_overlap) return;
  rep.oeis_matches = db.match(rep.terms, min_overlap);
}

}  // namespace linedi
