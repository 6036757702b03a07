#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "linedi/bigint.hpp"
#include "linedi/error.hpp"
#include "linedi/oeis.hpp"

namespace linedi::oeis {

inline constexpr const char* kDefaultBaseUrl = "https://oeis.org";

struct RemoteOptions {
  bool allow_network = false;
  std::chrono::milliseconds timeout{10'000};
  std::string base_url;  // empty: OEIS_BASE_URL, then kDefaultBaseUrl
};

inline std::string resolve_base_url(const RemoteOptions& opts) {
  if (!opts.base_url.empty()) return opts.base_url;
  if (const char* env = std::getenv("OEIS_BASE_URL"); env != nullptr && *env != '\0') return env;
  return kDefaultBaseUrl;
}

inline std::string format_id(long long number) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "A%06lld", number);
  return buf;
}

/// Turns a search response body into matches. Accepts both the bare array
/// layout and the older {"results": [...]} object; null means no hits.
inline std::vector<OeisMatch> parse_search_response(const std::string& body, const std::vector<BigInt>& terms) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::MalformedResponse, std::string("search response is not JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains("results")) fail(ErrorKind::MalformedResponse, "search response has no 'results'");
    doc = doc["results"];
  }
  std::vector<OeisMatch> out;
  if (doc.is_null()) return out;
  if (!doc.is_array()) fail(ErrorKind::MalformedResponse, "search results are not a list");
  const auto query = to_decimal(terms);
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("number") || !item["number"].is_number_integer() ||
        !item.contains("data") || !item["data"].is_string()) {
      fail(ErrorKind::MalformedResponse, "search result lacks 'number' or 'data'");
    }
    Entry e;
    const std::string line = format_id(item["number"].get<long long>()) + " ," + item["data"].get<std::string>() + ",";
    if (!parse_stripped_line(line, e)) fail(ErrorKind::MalformedResponse, "bad sequence number in search result");
    if (auto off = find_run(e.terms, query)) out.push_back({e.id, *off, query.size()});
  }
  std::sort(out.begin(), out.end(), [](const OeisMatch& a, const OeisMatch& b) { return a.id < b.id; });
  return out;
}

/// One blocking query against the search endpoint.
inline std::vector<OeisMatch> search_remote(const std::vector<BigInt>& terms, const RemoteOptions& opts) {
  if (terms.empty()) fail(ErrorKind::TooFewTerms, "no terms to search for");
  if (!opts.allow_network) fail(ErrorKind::Offline, "remote search disabled (network not enabled)");
  const std::string base = resolve_base_url(opts);

  std::string query;
  for (const auto& t : terms) query += (query.empty() ? "" : ",") + to_decimal(t);

  httplib::Client client(base);
  if (!client.is_valid()) fail(ErrorKind::Offline, "cannot use OEIS endpoint '" + base + "'");
  client.set_connection_timeout(opts.timeout);
  client.set_read_timeout(opts.timeout);
  client.set_write_timeout(opts.timeout);
  client.set_follow_location(true);

  const httplib::Params params{{"q", query}, {"fmt", "json"}};
  auto res = client.Get("/search", params, httplib::Headers{});
  if (!res) {
    const auto err = res.error();
    const std::string what = httplib::to_string(err);
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
      fail(ErrorKind::Timeout, "OEIS request timed out: " + what);
    }
    fail(ErrorKind::Offline, "OEIS unreachable at '" + base + "': " + what);
  }
  if (res->status != 200) {
    fail(ErrorKind::MalformedResponse, "OEIS answered HTTP " + std::to_string(res->status));
  }
  return parse_search_response(res->body, terms);
}

}  // namespace linedi::oeis
