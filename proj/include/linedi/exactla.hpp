#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linedi/bigint.hpp"
#include "linedi/digraph.hpp"
#include "linedi/error.hpp"

namespace linedi {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) fail(ErrorKind::DimensionMismatch, "IntMatrix rows must be square");
      std::size_t j = 0;
      for (long long x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  const std::vector<BigInt>& flat() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) fail(ErrorKind::DimensionMismatch, "matrix product");
    const std::size_t n = a.dim_;
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) fail(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend IntMatrix operator*(const BigInt& s, IntMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  /// Row-major decimal grid, one row per line.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) out += ' ';
        out += (*this)(i, j).str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// Entry (u,v) counts the arcs u -> v.
inline IntMatrix adjacency_matrix(const Digraph& g) {
  IntMatrix a(g.order());
  for (const Arc& arc : g.arcs()) a(arc.tail, arc.head) += 1;
  return a;
}

// ---------------------------------------------------------------------------
// Forward-equitable partitions

struct EquitablePartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> class_of;
  IntMatrix quotient;          // B(i,j): arcs from any vertex of class i into class j
  std::vector<BigInt> sizes;   // s = (|V_1|, ..., |V_m|)
};

namespace detail {

inline EquitablePartition partition_from_classes(std::size_t n, std::vector<std::vector<Vertex>> classes) {
  EquitablePartition p;
  p.class_of.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) p.class_of[v] = c;
  }
  p.quotient = IntMatrix(classes.size());
  for (const auto& cls : classes) p.sizes.emplace_back(cls.size());
  p.classes = std::move(classes);
  return p;
}

}  // namespace detail

/// Checks forward regularity of a caller-supplied partition and returns it with
/// its quotient matrix. Throws NotRegular naming the first offending vertex.
inline EquitablePartition verify_regular(const Digraph& g, std::vector<std::vector<Vertex>> classes) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) fail(ErrorKind::InvalidPartition, "empty class");
    for (Vertex v : cls) {
      if (v >= n) fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " in partition");
      if (seen[v]) fail(ErrorKind::InvalidPartition, "vertex " + std::to_string(v) + " in two classes");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) fail(ErrorKind::InvalidPartition, "classes do not cover every vertex");

  auto p = detail::partition_from_classes(n, std::move(classes));
  const std::size_t m = p.classes.size();
  std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(m, 0));
  for (const Arc& a : g.arcs()) ++counts[a.tail][p.class_of[a.head]];
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex rep = p.classes[i].front();
    for (std::size_t j = 0; j < m; ++j) p.quotient(i, j) = counts[rep][j];
    for (Vertex v : p.classes[i]) {
      for (std::size_t j = 0; j < m; ++j) {
        if (counts[v][j] != counts[rep][j]) {
          fail(ErrorKind::NotRegular, "vertex " + std::to_string(v) + " sends " + std::to_string(counts[v][j]) +
                                          " arcs into class " + std::to_string(j) + ", vertex " +
                                          std::to_string(rep) + " sends " + std::to_string(counts[rep][j]));
        }
      }
    }
  }
  return p;
}

/// Refines the one-class partition by out-arc profiles until stable. Class ids
/// follow the smallest vertex in each class.
inline EquitablePartition coarsest_equitable_partition(const Digraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return detail::partition_from_classes(0, {});
  const auto succ = successor_lists(g);
  std::vector<std::size_t> cls(n, 0);
  std::size_t num_classes = 1;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::map<std::size_t, std::size_t> profile;
      for (Vertex w : succ[v]) ++profile[cls[w]];
      auto key = std::pair{cls[v], std::vector<std::pair<std::size_t, std::size_t>>(profile.begin(), profile.end())};
      auto [it, inserted] = ids.try_emplace(std::move(key), ids.size());
      next[v] = it->second;
    }
    const std::size_t count = ids.size();
    cls = std::move(next);
    if (count == num_classes) break;
    num_classes = count;
  }
  std::vector<std::vector<Vertex>> classes(num_classes);
  for (Vertex v = 0; v < n; ++v) classes[cls[v]].push_back(v);
  return verify_regular(g, std::move(classes));
}

/// The singleton partition: quotient = adjacency matrix, s = j.
inline EquitablePartition singleton_partition(const Digraph& g) {
  std::vector<std::vector<Vertex>> classes(g.order());
  for (Vertex v = 0; v < g.order(); ++v) classes[v] = {v};
  auto p = detail::partition_from_classes(g.order(), std::move(classes));
  p.quotient = adjacency_matrix(g);
  return p;
}

// ---------------------------------------------------------------------------
// Walk counts

/// s B^k j^T for k = 0..max_k.
inline std::vector<BigInt> walk_counts(const IntMatrix& b, const std::vector<BigInt>& s, std::size_t max_k) {
  const std::size_t m = b.dim();
  if (s.size() != m) {
    fail(ErrorKind::DimensionMismatch, "size vector has " + std::to_string(s.size()) + " entries, matrix is " +
                                           std::to_string(m) + "x" + std::to_string(m));
  }
  std::vector<BigInt> v(m, 1), next(m);
  std::vector<BigInt> out;
  out.reserve(max_k + 1);
  for (std::size_t k = 0;; ++k) {
    BigInt total = 0;
    for (std::size_t i = 0; i < m; ++i) total += s[i] * v[i];
    out.push_back(std::move(total));
    if (k == max_k) break;
    for (std::size_t i = 0; i < m; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (b(i, j) != 0 && v[j] != 0) acc += b(i, j) * v[j];
      }
      next[i] = std::move(acc);
    }
    std::swap(v, next);
  }
  return out;
}

inline BigInt walk_count(const IntMatrix& b, const std::vector<BigInt>& s, std::size_t k) {
  return walk_counts(b, s, k).back();
}

/// j^T A^k j, i.e. the number of walks of length k.
inline std::vector<BigInt> walk_counts(const Digraph& g, std::size_t max_k) {
  return walk_counts(adjacency_matrix(g), std::vector<BigInt>(g.order(), 1), max_k);
}

// ---------------------------------------------------------------------------
// Minimal polynomial

/// x^r + c_{r-1} x^{r-1} + ... + c_0, stored lowest degree first.
struct MonicPolynomial {
  std::vector<BigInt> coeffs;  // c_0 .. c_{r-1}

  std::size_t degree() const noexcept { return coeffs.size(); }
  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

  /// Full coefficient list lowest degree first, including the leading 1.
  std::vector<BigInt> coefficient_list() const {
    auto out = coeffs;
    out.emplace_back(1);
    return out;
  }

  IntMatrix evaluate(const IntMatrix& m) const {
    // Horner: ((M + c_{r-1}) M + c_{r-2}) ...
    IntMatrix acc = IntMatrix::identity(m.dim());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * m + coeffs[i] * IntMatrix::identity(m.dim());
    return acc;
  }

  /// e.g. "x^4 - x^3 - x".
  std::string to_string() const {
    std::string out;
    const auto all = coefficient_list();
    for (std::size_t i = all.size(); i-- > 0;) {
      const BigInt& c = all[i];
      if (c == 0) continue;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

inline BigInt content(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt g = 0;
  for (const auto& x : a) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  }
  for (const auto& x : b) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  }
  return g < 0 ? BigInt(-g) : g;
}

}  // namespace detail

/// Least-degree monic integer polynomial annihilating m. The flattened powers
/// I, M, M^2, ... are reduced one at a time by fraction-free elimination (rows
/// divided by their content after each step) until a power falls in the span of
/// the earlier ones; the recorded combination is the polynomial.
inline MonicPolynomial minimal_polynomial(const IntMatrix& m) {
  struct Row {
    std::vector<BigInt> vec;
    std::vector<BigInt> combo;  // coefficients over I, M, M^2, ...
    std::size_t pivot;
  };
  std::vector<Row> rows;
  IntMatrix power = IntMatrix::identity(m.dim());
  for (std::size_t k = 0;; ++k) {
    std::vector<BigInt> vec = power.flat();
    std::vector<BigInt> combo(k + 1, 0);
    combo[k] = 1;
    for (auto& r : rows) r.combo.resize(k + 1, 0);
    for (const Row& r : rows) {
      const BigInt x = vec[r.pivot];
      if (x == 0) continue;
      const BigInt& p = r.vec[r.pivot];
      for (std::size_t i = 0; i < vec.size(); ++i) vec[i] = p * vec[i] - x * r.vec[i];
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = p * combo[i] - x * r.combo[i];
      const BigInt g = detail::content(vec, combo);
      if (g > 1) {
        for (auto& v : vec) v /= g;
        for (auto& c : combo) c /= g;
      }
    }
    auto nz = std::find_if(vec.begin(), vec.end(), [](const BigInt& x) { return x != 0; });
    if (nz == vec.end()) {
      const BigInt lead = combo[k];
      if (lead == 0) fail(ErrorKind::Internal, "minimal polynomial: degenerate dependency");
      MonicPolynomial poly;
      for (std::size_t i = 0; i < k; ++i) {
        if (combo[i] % lead != 0) fail(ErrorKind::Internal, "minimal polynomial has a non-integer coefficient");
        poly.coeffs.push_back(combo[i] / lead);
      }
      if (!poly.evaluate(m).is_zero()) fail(ErrorKind::Internal, "minimal polynomial does not annihilate M");
      return poly;
    }
    const auto pivot = static_cast<std::size_t>(nz - vec.begin());
    Row row{std::move(vec), std::move(combo), pivot};
    auto pos = std::lower_bound(rows.begin(), rows.end(), row.pivot,
                                [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows.insert(pos, std::move(row));
    power = power * m;
  }
}

// ---------------------------------------------------------------------------
// Linear recurrences

/// n_k = coeffs[0] n_{k-1} + coeffs[1] n_{k-2} + ... + coeffs[r-1] n_{k-r}
/// for every k >= start + r. coeffs is alpha_{r-1}, ..., alpha_0.
struct LinearRecurrence {
  std::size_t order = 0;
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  std::vector<BigInt> initial;  // n_0 .. n_{start+order-1}

  /// Next term from the last `order` terms of `terms`.
  BigInt next(const std::vector<BigInt>& terms) const {
    if (terms.size() < order) fail(ErrorKind::InsufficientTerms, "recurrence needs " + std::to_string(order) + " terms");
    Rational acc = 0;
    for (std::size_t j = 0; j < order; ++j) acc += coeffs[j] * Rational(terms[terms.size() - 1 - j]);
    if (boost::multiprecision::denominator(acc) != 1) fail(ErrorKind::Internal, "recurrence produced a non-integer");
    return boost::multiprecision::numerator(acc);
  }

  /// initial terms followed by recurrence values, total_terms long.
  std::vector<BigInt> generate(std::size_t total_terms) const {
    std::vector<BigInt> out(initial.begin(), initial.begin() + std::min(total_terms, initial.size()));
    while (out.size() < total_terms) out.push_back(next(out));
    return out;
  }

  bool holds_for(const std::vector<BigInt>& terms) const {
    for (std::size_t k = start + order; k < terms.size(); ++k) {
      Rational acc = 0;
      for (std::size_t j = 0; j < order; ++j) acc += coeffs[j] * Rational(terms[k - 1 - j]);
      if (acc != Rational(terms[k])) return false;
    }
    return true;
  }

  /// e.g. "n_k = n_{k-1} + n_{k-3}".
  std::string to_string() const {
    std::string out = "n_k =";
    bool first = true;
    for (std::size_t j = 0; j < order; ++j) {
      const Rational& c = coeffs[j];
      if (c == 0) continue;
      const Rational mag = c < 0 ? Rational(-c) : c;
      out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
      if (mag != 1) {
        out += boost::multiprecision::denominator(mag) == 1 ? boost::multiprecision::numerator(mag).str()
                                                             : "(" + to_fraction_string(mag) + ")";
        out += " ";
      }
      out += "n_{k-" + std::to_string(j + 1) + "}";
      first = false;
    }
    if (first) out += " 0";
    return out;
  }
};

/// With m(x) = x^r - alpha_{r-1} x^{r-1} - ... - alpha_0, n_k = sum alpha_i n_{k-r+i}
/// from k = r, seeded with the supplied n_0..n_{r-1}.
inline LinearRecurrence recurrence_from_polynomial(const MonicPolynomial& m, std::vector<BigInt> initial) {
  const std::size_t r = m.degree();
  if (initial.size() < r) fail(ErrorKind::InsufficientTerms, "need " + std::to_string(r) + " initial terms");
  initial.resize(r);
  LinearRecurrence rec;
  rec.order = r;
  rec.start = 0;
  rec.initial = std::move(initial);
  for (std::size_t j = 0; j < r; ++j) rec.coeffs.emplace_back(-m.coeffs[r - 1 - j]);
  return rec;
}

namespace detail {

// Solves sum_j x_j t[k-1-j] = t[k] for k in [first, t.size()), r unknowns.
inline std::optional<std::vector<Rational>> solve_recurrence_system(const std::vector<BigInt>& t, std::size_t r,
                                                                    std::size_t first) {
  const std::size_t rows = t.size() - first;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t k = first + i;
    for (std::size_t j = 0; j < r; ++j) a[i][j] = Rational(t[k - 1 - j]);
    a[i][r] = Rational(t[k]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const Rational inv = 1 / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= r; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (a[i][r] != 0) return std::nullopt;
  }
  std::vector<Rational> x(r, 0);  // free variables fixed at 0
  for (std::size_t i = 0; i < rank; ++i) x[pivot_cols[i]] = a[i][r];
  return x;
}

}  // namespace detail

/// Least-order recurrence satisfied by the terms, then the smallest start index
/// for that order. An order-r candidate must be checked by at least r+1
/// equations, so orders beyond (len-1)/2 are never proposed.
inline LinearRecurrence minimal_recurrence(const std::vector<BigInt>& terms) {
  const std::size_t len = terms.size();
  if (len < 4) fail(ErrorKind::InsufficientTerms, "minimal_recurrence needs at least 4 terms, got " + std::to_string(len));
  for (std::size_t r = 0; 2 * r + 1 <= len; ++r) {
    for (std::size_t start = 0; start + 2 * r + 1 <= len; ++start) {
      LinearRecurrence rec;
      rec.order = r;
      rec.start = start;
      rec.initial.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start + r));
      if (r == 0) {
        if (std::all_of(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end(),
                        [](const BigInt& x) { return x == 0; })) {
          return rec;
        }
        continue;
      }
      auto solution = detail::solve_recurrence_system(terms, r, start + r);
      if (!solution) continue;
      rec.coeffs = std::move(*solution);
      return rec;
    }
  }
  fail(ErrorKind::NoRecurrenceFound,
       "no recurrence of order <= " + std::to_string((len - 1) / 2) + " fits " + std::to_string(len) + " terms");
}

}  // namespace linedi
