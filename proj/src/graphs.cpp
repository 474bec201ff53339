#include "qrbf/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qrbf/errors.hpp"

namespace qrbf {

BipartitePattern::BipartitePattern(std::vector<std::string> left, std::vector<std::string> right,
                                   std::vector<Edge> edges)
    : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)), neighbors_(right_.size()) {
  std::set<Edge> seen;
  for (const auto& [l, r] : edges_) {
    if (l >= left_.size() || r >= right_.size()) throw std::invalid_argument("bipartite edge endpoint out of range");
    if (!seen.insert({l, r}).second) throw std::invalid_argument("duplicate bipartite edge");
    neighbors_[r].push_back(l);
  }
}

std::vector<std::size_t> BipartitePattern::right_vertices_of_degree(std::size_t degree) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < right_.size(); ++r)
    if (neighbors_[r].size() == degree) out.push_back(r);
  return out;
}

SimplePattern::SimplePattern(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (const auto& [u, v] : edges_) {
    if (u >= vertices_.size() || v >= vertices_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple pattern");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw std::invalid_argument("duplicate edge");
  }
}

namespace {

std::vector<std::string> numbered_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

SimplePattern SimplePattern::complete(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  return SimplePattern(numbered_labels(m), std::move(edges));
}

SimplePattern SimplePattern::path(std::size_t edge_count) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return SimplePattern(numbered_labels(edge_count + 1), std::move(edges));
}

SimplePattern SimplePattern::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SimplePattern(numbered_labels(leaves + 1), std::move(edges));
}

SimplePattern SimplePattern::edgeless(std::size_t m) { return SimplePattern(numbered_labels(m), {}); }

InjectionMap::InjectionMap(std::vector<Point> images) : images_(std::move(images)) {
  std::set<Point> seen(images_.begin(), images_.end());
  if (seen.size() != images_.size()) throw std::invalid_argument("injection maps two vertices to the same point");
}

int InjectionMap::diameter() const {
  int d = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j) d = std::max(d, hamming_distance(images_[i], images_[j]));
  return d;
}

bool bc_adjacent(const BooleanFunction& f, Point u, Point v) { return f.evaluate(u ^ v) == -1; }

std::int64_t codegree(const BooleanFunction& f, Point u, Point v) {
  if (u >= f.size() || v >= f.size()) throw std::out_of_range("codegree: point outside F_2^n");
  std::int64_t count = 0;
  for (Point c = 0; c < f.size(); ++c) count += f.bit(u ^ c) & f.bit(v ^ c);
  return count;
}

std::int64_t codegree(const AutocorrelationTable& table, std::int64_t w0, Point u, Point v) {
  // [f(a)=-1] = (1 - f(a))/2; expand the product and sum over c.
  const std::int64_t size = std::int64_t{1} << table.n;
  return (size - 2 * w0 + table.A.at(u ^ v)) / 4;
}

bool rhg_edge(const BooleanFunction& f, Point u, Point v, Point colour) {
  if (u == v) throw std::invalid_argument("rainbow Hamming graph has no loops");
  return f.evaluate(u ^ colour) == f.evaluate(v ^ colour);
}

SlotTables bhom_slots(const BipartitePattern& g, const InjectionMap& psi, const BooleanFunction& f) {
  if (psi.size() != g.left().size()) throw std::invalid_argument("injection must cover every left vertex");
  for (Point p : psi.images())
    if (p >= f.size()) throw std::invalid_argument("injection image outside F_2^n");
  SlotTables t{f.n(), {}};
  for (std::size_t r = 0; r < g.right().size(); ++r) {
    std::vector<std::uint8_t> slot(f.size());
    for (Point c = 0; c < f.size(); ++c) {
      unsigned all = 1;
      for (std::size_t l : g.right_neighbors(r)) all &= f.bit(psi[l] ^ c);
      slot[c] = static_cast<std::uint8_t>(all);
    }
    t.slots.push_back(std::move(slot));
  }
  return t;
}

Estimate bhom_fixed_left(const BipartitePattern& g, const InjectionMap& psi, const BooleanFunction& f,
                         const SamplingOptions& options) {
  return injective_mean(bhom_slots(g, psi, f), options);
}

SlotTables rainbow_slots(const SimplePattern& g, const InjectionMap& phi, const BooleanFunction& f) {
  if (phi.size() != g.vertices().size()) throw std::invalid_argument("injection must cover every vertex");
  for (Point p : phi.images())
    if (p >= f.size()) throw std::invalid_argument("injection image outside F_2^n");
  SlotTables t{f.n(), {}};
  for (const auto& [u, v] : g.edges()) {
    std::vector<std::uint8_t> slot(f.size());
    for (Point c = 0; c < f.size(); ++c) slot[c] = f.bit(phi[u] ^ c) == f.bit(phi[v] ^ c);
    t.slots.push_back(std::move(slot));
  }
  return t;
}

Estimate rainbow_embedding_density(const SimplePattern& g, const InjectionMap& phi, const BooleanFunction& f,
                                   int d, const SamplingOptions& options) {
  if (d < 0) throw std::invalid_argument("rank d must be nonnegative");
  for (Point p : phi.images())
    if (weight(p) > d) throw std::invalid_argument("embedding point outside the radius-d ball");
  if (phi.diameter() > d) throw std::invalid_argument("embedding diameter exceeds d");
  return injective_mean(rainbow_slots(g, phi, f), options);
}

BipartitePattern subdivision(const SimplePattern& g) {
  std::vector<std::string> right;
  std::vector<BipartitePattern::Edge> edges;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [u, v] = g.edges()[e];
    right.push_back(g.vertices()[u] + "_" + g.vertices()[v]);
    edges.emplace_back(u, e);
    edges.emplace_back(v, e);
  }
  return BipartitePattern(g.vertices(), std::move(right), std::move(edges));
}

double subgraph_expansion_sum(const SimplePattern& g, double x, double y, double z, std::uint64_t budget) {
  const BipartitePattern s = subdivision(g);
  const std::size_t m = s.edges().size();
  if (m >= 62) throw BudgetExceeded("subgraph expansion", ~std::uint64_t{0}, budget);
  check_budget("subgraph expansion", std::uint64_t{1} << m, budget);
  const std::size_t right = s.right().size();
  std::vector<int> first_edge(right, -1);
  for (std::size_t i = 0; i < m; ++i)
    if (first_edge[s.edges()[i].second] < 0) first_edge[s.edges()[i].second] = static_cast<int>(i);

  double total = 0;
  std::vector<int> degree(right);
  std::vector<bool> has_first(right);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::fill(degree.begin(), degree.end(), 0);
    std::fill(has_first.begin(), has_first.end(), false);
    for (std::size_t i = 0; i < m; ++i) {
      if (!((subset >> i) & 1)) continue;
      const std::size_t r = s.edges()[i].second;
      ++degree[r];
      if (static_cast<int>(i) == first_edge[r]) has_first[r] = true;
    }
    int d2 = 0, da = 0, db = 0;
    for (std::size_t r = 0; r < right; ++r) {
      if (degree[r] == 2) ++d2;
      else if (degree[r] == 1) (has_first[r] ? da : db) += 1;
    }
    total += std::pow(x, d2) * std::pow(y, da) * std::pow(z, db);
  }
  return total;
}

namespace {

struct KeyedLines {
  std::map<std::string, std::pair<int, std::vector<std::string>>> entries;
};

KeyedLines read_keyed(const std::string& text, const std::set<std::string>& allowed) {
  KeyedLines out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'key: values'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (!allowed.count(key)) throw ParseError(number, "unknown key '" + key + "'");
    if (out.entries.count(key)) throw ParseError(number, "repeated key '" + key + "'");
    std::istringstream values(line.substr(colon + 1));
    std::vector<std::string> tokens;
    for (std::string t; values >> t;) tokens.push_back(t);
    out.entries[key] = {number, std::move(tokens)};
  }
  return out;
}

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels, int line) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw ParseError(line, "duplicate vertex label '" + labels[i] + "'");
  return index;
}

std::pair<std::string, std::string> split_edge(const std::string& token, int line) {
  const auto dash = token.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == token.size() ||
      token.find('-', dash + 1) != std::string::npos)
    throw ParseError(line, "malformed edge '" + token + "'");
  return {token.substr(0, dash), token.substr(dash + 1)};
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& label, int line) {
  auto it = index.find(label);
  if (it == index.end()) throw ParseError(line, "unknown vertex '" + label + "'");
  return it->second;
}

template <class Build>
auto rethrow_as_parse_error(int line, Build&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

BipartitePattern parse_bipartite_pattern(const std::string& text) {
  const auto keyed = read_keyed(text, {"left", "right", "edges"});
  for (const char* key : {"left", "right"})
    if (!keyed.entries.count(key)) throw ParseError(0, std::string("missing '") + key + "' line");
  const auto& [left_line, left] = keyed.entries.at("left");
  const auto& [right_line, right] = keyed.entries.at("right");
  const auto left_index = index_labels(left, left_line);
  const auto right_index = index_labels(right, right_line);
  for (const auto& label : right)
    if (left_index.count(label)) throw ParseError(right_line, "label '" + label + "' is on both sides");
  std::vector<BipartitePattern::Edge> edges;
  int edge_line = 0;
  if (auto it = keyed.entries.find("edges"); it != keyed.entries.end()) {
    edge_line = it->second.first;
    for (const auto& token : it->second.second) {
      const auto [a, b] = split_edge(token, edge_line);
      edges.emplace_back(lookup(left_index, a, edge_line), lookup(right_index, b, edge_line));
    }
  }
  return rethrow_as_parse_error(edge_line, [&] { return BipartitePattern(left, right, edges); });
}

SimplePattern parse_simple_pattern(const std::string& text) {
  const auto keyed = read_keyed(text, {"vertices", "edges"});
  if (!keyed.entries.count("vertices")) throw ParseError(0, "missing 'vertices' line");
  const auto& [vertex_line, vertices] = keyed.entries.at("vertices");
  const auto index = index_labels(vertices, vertex_line);
  std::vector<SimplePattern::Edge> edges;
  int edge_line = 0;
  if (auto it = keyed.entries.find("edges"); it != keyed.entries.end()) {
    edge_line = it->second.first;
    for (const auto& token : it->second.second) {
      const auto [a, b] = split_edge(token, edge_line);
      edges.emplace_back(lookup(index, a, edge_line), lookup(index, b, edge_line));
    }
  }
  return rethrow_as_parse_error(edge_line, [&] { return SimplePattern(vertices, edges); });
}

InjectionMap parse_injection(const std::string& text, const std::vector<std::string>& labels) {
  std::map<std::string, Point> assigned;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    for (std::string token; tokens >> token;) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
        throw ParseError(number, "expected 'vertex=hexpoint', got '" + token + "'");
      const std::string label = token.substr(0, eq);
      std::string hex = token.substr(eq + 1);
      if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex.erase(0, 2);
      if (hex.empty() || hex.size() > 16 || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw ParseError(number, "malformed point '" + token.substr(eq + 1) + "'");
      if (!assigned.emplace(label, std::stoull(hex, nullptr, 16)).second)
        throw ParseError(number, "vertex '" + label + "' assigned twice");
    }
  }
  std::vector<Point> images;
  for (const auto& label : labels) {
    auto it = assigned.find(label);
    if (it == assigned.end()) throw ParseError(number, "vertex '" + label + "' has no image");
    images.push_back(it->second);
    assigned.erase(it);
  }
  if (!assigned.empty()) throw ParseError(number, "unknown vertex '" + assigned.begin()->first + "'");
  return rethrow_as_parse_error(number, [&] { return InjectionMap(images); });
}

std::string to_text(const BipartitePattern& g) {
  std::ostringstream os;
  os << "left:";
  for (const auto& l : g.left()) os << ' ' << l;
  os << "\nright:";
  for (const auto& r : g.right()) os << ' ' << r;
  os << "\nedges:";
  for (const auto& [l, r] : g.edges()) os << ' ' << g.left()[l] << '-' << g.right()[r];
  os << '\n';
  return os.str();
}

std::string to_text(const SimplePattern& g) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : g.vertices()) os << ' ' << v;
  os << "\nedges:";
  for (const auto& [u, v] : g.edges()) os << ' ' << g.vertices()[u] << '-' << g.vertices()[v];
  os << '\n';
  return os.str();
}

}  // namespace qrbf
