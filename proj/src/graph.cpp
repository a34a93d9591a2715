#include "intlap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "intlap/errors.hpp"

namespace intlap {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }

  Graph g;
  g.labels_ = std::move(labels);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

void Graph::throw_out_of_range(Vertex v) {
  throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& Graph::label(Vertex v) const {
  check(v);
  return labels_[v];
}

Vertex Graph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; static_cast<std::size_t>(u) < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.n(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

namespace {

struct Record {
  std::size_t line;
  std::vector<std::string_view> tokens;
};

bool is_token_byte(unsigned char c) {
  // Printable ASCII or any byte of a multi-byte UTF-8 sequence.
  return (c > 0x20 && c < 0x7f && c != '#') || c >= 0x80;
}

std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      unsigned char c = static_cast<unsigned char>(line[i]);
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (!is_token_byte(c)) {
        throw ParseError(line_no, "unexpected control character");
      }
      std::size_t j = i;
      while (j < line.size() && is_token_byte(static_cast<unsigned char>(line[j]))) ++j;
      rec.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (rec.tokens.empty()) continue;
    if (rec.tokens.size() != 2) {
      throw ParseError(line_no, "expected two tokens, found " +
                                    std::to_string(rec.tokens.size()));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

bool parse_count(std::string_view tok, std::size_t& out) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                  [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Record> records = tokenize(text);

  std::size_t first_edge = 0;
  std::size_t header_n = 0;
  if (!records.empty()) {
    std::size_t n = 0, m = 0;
    if (parse_count(records[0].tokens[0], n) && parse_count(records[0].tokens[1], m) &&
        m == records.size() - 1) {
      std::unordered_map<std::string_view, int> distinct;
      for (std::size_t r = 1; r < records.size(); ++r) {
        distinct.emplace(records[r].tokens[0], 0);
        distinct.emplace(records[r].tokens[1], 0);
      }
      if (n >= distinct.size()) {
        first_edge = 1;
        header_n = n;
      }
    }
  }

  std::unordered_map<std::string_view, Vertex> ids;
  std::vector<std::string> labels;
  auto id_of = [&](std::string_view tok) {
    auto [it, inserted] = ids.emplace(tok, static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(tok);
    return it->second;
  };

  std::vector<Edge> edges;
  edges.reserve(records.size());
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t r = first_edge; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.tokens[0] == rec.tokens[1]) {
      throw ParseError(rec.line, "self-loop on '" + std::string(rec.tokens[0]) + "'");
    }
    Vertex u = id_of(rec.tokens[0]);
    Vertex v = id_of(rec.tokens[1]);
    auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
               static_cast<std::uint32_t>(std::max(u, v));
    if (auto [it, inserted] = seen.emplace(key, rec.line); !inserted) {
      throw ParseError(rec.line, "duplicate edge (first seen on line " +
                                     std::to_string(it->second) + ")");
    }
    edges.emplace_back(u, v);
  }
  while (labels.size() < header_n) {
    std::string name = "_" + std::to_string(labels.size());
    if (ids.contains(name)) {
      throw ParseError(records[0].line, "cannot name isolated vertex '" + name + "'");
    }
    labels.push_back(std::move(name));
  }
  std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
  return out.str();
}

std::string format_set(const Graph& g, std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += g.label(vs[i]);
  }
  out += '}';
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> index(g.n(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    index[vs[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(vs[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (Vertex w : g.neighbors(vs[i])) {
      if (index[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), index[w]);
    }
  }
  return Graph::from_edges(vs.size(), edges, std::move(labels));
}

}  // namespace intlap
