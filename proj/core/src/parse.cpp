#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "cyclat/multigraph.hpp"

namespace cyclat {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

std::optional<long long> as_count(const std::string& tok) {
  long long value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

struct RawEdge {
  std::string u;
  std::string v;
  std::optional<long long> id;
  int line;
};

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<RawEdge> raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
      auto n = as_count(tokens[0]);
      auto m = as_count(tokens[1]);
      if (!n || !m) throw ParseError(line_no, "header counts must be non-negative integers");
      header.emplace(*n, *m);
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected \"u v\" or \"u v id\"");
    }
    if (static_cast<long long>(raw.size()) == header->second) {
      throw ParseError(line_no, "more edge lines than declared");
    }
    RawEdge edge{tokens[0], tokens[1], std::nullopt, line_no};
    if (tokens.size() == 3) {
      edge.id = as_count(tokens[2]);
      if (!edge.id) throw ParseError(line_no, "edge id must be a non-negative integer");
    }
    raw.push_back(std::move(edge));
  }
  if (!header) throw ParseError(0, "missing header line");
  const auto [n, m] = *header;
  if (static_cast<long long>(raw.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(raw.size()));
  }

  // Distinct tokens in first-appearance order, with the line that introduced them.
  std::vector<std::pair<std::string, int>> tokens;
  std::map<std::string, int> seen;
  for (const RawEdge& e : raw) {
    for (const std::string* t : {&e.u, &e.v}) {
      if (seen.emplace(*t, 0).second) tokens.emplace_back(*t, e.line);
    }
  }
  if (static_cast<long long>(tokens.size()) > n) {
    throw ParseError(tokens[static_cast<std::size_t>(n)].second,
                     "unknown vertex token '" + tokens[static_cast<std::size_t>(n)].first +
                         "' (header declares " + std::to_string(n) + " vertices)");
  }

  std::vector<std::string> labels;
  const bool numeric = std::all_of(tokens.begin(), tokens.end(),
                                   [](const auto& t) { return as_count(t.first).has_value(); });
  if (numeric) {
    long long lo = n, hi = -1;
    for (const auto& t : tokens) {
      const long long x = *as_count(t.first);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    std::vector<std::pair<long long, std::string>> order;
    for (const auto& t : tokens) order.emplace_back(*as_count(t.first), t.first);
    std::sort(order.begin(), order.end());
    if (tokens.empty() || (lo >= 0 && hi <= n - 1) || (lo >= 1 && hi <= n)) {
      // Tokens index a contiguous range 0..n-1 or 1..n; isolated vertices fill gaps.
      const long long base = (tokens.empty() || lo == 0 || hi <= n - 1) ? 0 : 1;
      std::map<long long, std::string> spelled;
      for (auto& [value, tok] : order) spelled.emplace(value, tok);
      for (long long x = base; x < base + n; ++x) {
        auto it = spelled.find(x);
        labels.push_back(it != spelled.end() ? it->second : std::to_string(x));
      }
    } else {
      for (auto& [value, tok] : order) labels.push_back(tok);
    }
  } else {
    for (const auto& t : tokens) labels.push_back(t.first);
  }
  for (int pad = 1; static_cast<long long>(labels.size()) < n; ++pad) {
    labels.push_back("_" + std::to_string(pad));
  }

  std::map<std::string, VertexId> index;
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<VertexId>(i)).second) {
      throw ParseError(0, "vertex token '" + labels[i] + "' is ambiguous");
    }
    vertices.push_back(static_cast<VertexId>(i));
  }

  std::vector<Edge> edges;
  std::vector<char> used;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawEdge& r = raw[i];
    const long long id = r.id.value_or(static_cast<long long>(i));
    if (id > 100'000'000) throw ParseError(r.line, "edge id too large");
    if (static_cast<std::size_t>(id) >= used.size()) used.resize(static_cast<std::size_t>(id) + 1, 0);
    if (used[static_cast<std::size_t>(id)]) {
      throw ParseError(r.line, "duplicate edge id " + std::to_string(id));
    }
    used[static_cast<std::size_t>(id)] = 1;
    edges.push_back({static_cast<EdgeId>(id), index.at(r.u), index.at(r.v)});
  }
  return Multigraph(std::move(vertices), std::move(edges), std::move(labels));
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.id << '\n';
  }
  return out.str();
}

}  // namespace cyclat
