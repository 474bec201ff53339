#pragma once

// Graph views of a Boolean function f on F_2^n. Nothing here materializes a
// graph on 2^n vertices; every query goes through an adjacency oracle on f.
//
//   bipartite Cayley graph BC(f): u ~ v  iff  f(u + v) = -1
//   rainbow Hamming graph:        (u, v) carries colour x  iff  f(u + x) = f(v + x)

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrbf/bits.hpp"
#include "qrbf/core.hpp"
#include "qrbf/estimate.hpp"
#include "qrbf/injective.hpp"

namespace qrbf {

/// Bipartite pattern H = (L + R, F). Edges are (left index, right index).
class BipartitePattern {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  BipartitePattern(std::vector<std::string> left, std::vector<std::string> right, std::vector<Edge> edges);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t right_degree(std::size_t r) const { return neighbors_.at(r).size(); }
  /// Left neighbours of right vertex r, in edge-list order.
  const std::vector<std::size_t>& right_neighbors(std::size_t r) const { return neighbors_.at(r); }
  /// Right vertices of the given degree (D_1, D_2, ...).
  std::vector<std::size_t> right_vertices_of_degree(std::size_t degree) const;
  std::size_t count_right_degree(std::size_t degree) const { return right_vertices_of_degree(degree).size(); }

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Simple undirected graph; edge (u, v) keeps the given orientation so that
/// the subdivision is reproducible.
class SimplePattern {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimplePattern(std::vector<std::string> vertices, std::vector<Edge> edges);

  static SimplePattern complete(std::size_t m);
  static SimplePattern path(std::size_t edges);
  static SimplePattern star(std::size_t leaves);
  static SimplePattern edgeless(std::size_t m);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Injective assignment of points to pattern vertices, indexed like the pattern.
class InjectionMap {
 public:
  InjectionMap() = default;
  explicit InjectionMap(std::vector<Point> images);

  const std::vector<Point>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }

  /// Largest pairwise Hamming distance; 0 for fewer than two points.
  int diameter() const;

 private:
  std::vector<Point> images_;
};

bool bc_adjacent(const BooleanFunction& f, Point u, Point v);

/// |N(u) and N(v)| in BC(f) by direct count.
std::int64_t codegree(const BooleanFunction& f, Point u, Point v);

/// Same count from the spectrum: (2^n - 2 W(0) + A(u+v)) / 4.
std::int64_t codegree(const AutocorrelationTable& table, std::int64_t w0, Point u, Point v);

/// Rainbow Hamming graph edge test; u == v is rejected.
bool rhg_edge(const BooleanFunction& f, Point u, Point v, Point colour);

/// Slot tables for the fixed-left homomorphism density: slot r is
/// c -> prod over left neighbours l of r of [psi(l) ~ c].
SlotTables bhom_slots(const BipartitePattern& g, const InjectionMap& psi, const BooleanFunction& f);

/// E over injective phi: R -> F_2^n of prod_{(l,r) in F} [psi(l) ~ phi(r)].
Estimate bhom_fixed_left(const BipartitePattern& g, const InjectionMap& psi, const BooleanFunction& f,
                         const SamplingOptions& options = {});

/// Slot tables for rainbow embeddings: slot e = (u, v) is c -> [f(phi u + c) = f(phi v + c)].
SlotTables rainbow_slots(const SimplePattern& g, const InjectionMap& phi, const BooleanFunction& f);

/// E over injective colourings chi: E -> F_2^n of prod_e [rhg_edge(f, phi u, phi v, chi(e))].
/// Requires every image in the radius-d ball and diameter at most d.
Estimate rainbow_embedding_density(const SimplePattern& g, const InjectionMap& phi, const BooleanFunction& f,
                                   int d, const SamplingOptions& options = {});

/// Left = V(G); one right vertex per edge, joined to both endpoints.
/// Edge 2e is (u_e, e) and edge 2e+1 is (v_e, e).
BipartitePattern subdivision(const SimplePattern& g);

/// Sum over all subgraphs of Subdiv(G) of x^|D2| y^|DA| z^|DB|, where a right
/// vertex is in D2 with both edges, DA with only its first, DB with only its second.
double subgraph_expansion_sum(const SimplePattern& g, double x, double y, double z,
                              std::uint64_t budget = kDefaultBudget);

// Pattern text formats. Blank lines and '#' comments are ignored.
//   bipartite:  left: a b c / right: r s / edges: a-r b-r
//   simple:     vertices: a b c / edges: a-b b-c
//   injection:  a=0x3 b=5  (hex, optional 0x prefix), one token per vertex
BipartitePattern parse_bipartite_pattern(const std::string& text);
SimplePattern parse_simple_pattern(const std::string& text);
InjectionMap parse_injection(const std::string& text, const std::vector<std::string>& labels);

std::string to_text(const BipartitePattern& g);
std::string to_text(const SimplePattern& g);

}  // namespace qrbf
