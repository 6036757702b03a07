#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "linedi/bigint.hpp"
#include "linedi/error.hpp"

namespace linedi::oeis {

struct OeisMatch {
  std::string id;  // 'A' followed by six digits
  std::size_t offset = 0;  // index in the entry where the query begins
  std::size_t matched_length = 0;

  friend bool operator==(const OeisMatch&, const OeisMatch&) = default;
};

inline constexpr std::size_t kDefaultMinOverlap = 8;

inline bool valid_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Entry {
  std::string id;
  std::vector<std::string> terms;  // decimal, as stored
};

/// Splits "A000045 ,0,1,1,2," into its id and terms. Returns false for lines
/// that are not entries (comments, blanks, malformed ids).
inline bool parse_stripped_line(std::string_view line, Entry& out) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty() || line[0] == '#') return false;
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  const auto id = line.substr(0, space);
  if (!valid_id(id)) return false;
  out.id = std::string(id);
  out.terms.clear();
  std::string_view rest = line.substr(space + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string_view::npos) comma = rest.size();
    auto tok = rest.substr(pos, comma - pos);
    if (!tok.empty()) out.terms.emplace_back(tok);
    pos = comma + 1;
  }
  return true;
}

/// Index of the first position where `query` occurs as a consecutive run.
inline std::optional<std::size_t> find_run(const std::vector<std::string>& haystack,
                                           const std::vector<std::string>& query) {
  if (query.empty() || query.size() > haystack.size()) return std::nullopt;
  auto it = std::search(haystack.begin(), haystack.end(), query.begin(), query.end());
  if (it == haystack.end()) return std::nullopt;
  return static_cast<std::size_t>(it - haystack.begin());
}

/// In-memory copy of a stripped snapshot (plain or gzip-compressed).
class LocalDatabase {
 public:
  static LocalDatabase load(const std::string& path) {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) fail(ErrorKind::DbUnreadable, "cannot open OEIS snapshot '" + path + "'");
    LocalDatabase db;
    std::string line;
    char buf[8192];
    Entry e;
    while (gzgets(file, buf, sizeof buf) != nullptr) {
      line += buf;
      if (line.back() != '\n' && !gzeof(file)) continue;
      if (parse_stripped_line(line, e)) db.entries_.push_back(e);
      line.clear();
    }
    if (!line.empty() && parse_stripped_line(line, e)) db.entries_.push_back(e);
    int err = 0;
    const char* msg = gzerror(file, &err);
    const bool bad = err != Z_OK && err != Z_STREAM_END;
    const std::string detail = bad && msg ? msg : "";
    gzclose(file);
    if (bad) fail(ErrorKind::DbUnreadable, "error reading '" + path + "': " + detail);
    return db;
  }

  static LocalDatabase from_entries(std::vector<Entry> entries) {
    LocalDatabase db;
    db.entries_ = std::move(entries);
    return db;
  }

  std::size_t size() const noexcept { return entries_.size(); }

  /// Every entry containing the query as a consecutive run, sorted by id.
  std::vector<OeisMatch> match(const std::vector<BigInt>& terms, std::size_t min_overlap = kDefaultMinOverlap) const {
    if (terms.size() < min_overlap || terms.empty()) {
      fail(ErrorKind::TooFewTerms, std::to_string(terms.size()) + " terms, need at least " +
                                       std::to_string(std::max<std::size_t>(min_overlap, 1)));
    }
    const auto query = to_decimal(terms);
    std::vector<OeisMatch> out;
    for (const auto& e : entries_) {
      if (auto off = find_run(e.terms, query)) out.push_back({e.id, *off, query.size()});
    }
    std::sort(out.begin(), out.end(), [](const OeisMatch& a, const OeisMatch& b) {
      return a.id != b.id ? a.id < b.id : a.offset < b.offset;
    });
    out.erase(std::unique(out.begin(), out.end(), [](const OeisMatch& a, const OeisMatch& b) { return a.id == b.id; }),
              out.end());
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

inline std::vector<OeisMatch> match_local(const std::vector<BigInt>& terms, const std::string& db_path,
                                          std::size_t min_overlap = kDefaultMinOverlap) {
  if (terms.size() < min_overlap || terms.empty()) {
    fail(ErrorKind::TooFewTerms, std::to_string(terms.size()) + " terms, need at least " +
                                     std::to_string(std::max<std::size_t>(min_overlap, 1)));
  }
  return LocalDatabase::load(db_path).match(terms, min_overlap);
}

}  // namespace linedi::oeis
