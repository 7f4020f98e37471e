#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mayer/common.hpp"

namespace mayer {

/// Bit set over vertex pairs. Pair {i,j} with i<j lives at bit
/// (j-1)(j-2)/2 + (i-1), so the pairs of V_n are exactly the low
/// n(n-1)/2 bits for every n.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxOrder = 11;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

constexpr EdgeMask all_pairs(int n) {
  const int p = pair_count(n);
  return p >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << p) - 1;
}

/// Unchecked bit index of the pair {a,b}, a != b.
constexpr int pair_index(int a, int b) {
  return a < b ? (b - 1) * (b - 2) / 2 + (a - 1) : (a - 1) * (a - 2) / 2 + (b - 1);
}

/// Unordered pair of distinct 1-based vertex labels, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  int index() const { return (v - 1) * (v - 2) / 2 + (u - 1); }
  static Edge at(int index);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

int popcount(EdgeMask m);
EdgeMask mask_of(std::span<const Edge> edges);
std::vector<Edge> edges_of(EdgeMask m);

/// Neighbour bit sets (bit v-1 for vertex v) of the graph (V_n; edges).
std::array<std::uint32_t, kMaxOrder + 1> adjacency(int n, EdgeMask edges);

bool is_connected(int n, EdgeMask edges);
bool is_connected(int n, std::span<const Edge> edges);
bool is_biconnected(int n, EdgeMask edges);
bool is_biconnected(int n, std::span<const Edge> edges);

/// G(V_n; X_f, X_f~): disjoint Mayer and Boltzmann edge sets whose
/// endpoints cover {1..n} exactly.
class MarkedGraph {
 public:
  MarkedGraph(int order, EdgeMask mayer, EdgeMask boltzmann = 0);
  static MarkedGraph from_edges(int order, std::span<const Edge> mayer,
                                std::span<const Edge> boltzmann = {});

  int order() const { return order_; }
  EdgeMask mayer() const { return mayer_; }
  EdgeMask boltzmann() const { return boltzmann_; }
  int mayer_count() const { return popcount(mayer_); }
  int boltzmann_count() const { return popcount(boltzmann_); }
  int edge_count() const { return mayer_count() + boltzmann_count(); }

  /// Mayer subgraph R(G) is connected on V_n.
  bool is_basic() const { return is_connected(order_, mayer_); }
  /// Every vertex pair carries a Mayer or a Boltzmann function.
  bool is_complete() const { return (mayer_ | boltzmann_) == all_pairs(order_); }

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

 private:
  int order_;
  EdgeMask mayer_;
  EdgeMask boltzmann_;
};

struct Subgraph {
  int order;
  std::vector<Edge> edges;
};

Subgraph mayer_subgraph(const MarkedGraph& g);

/// N1(G) = |X_f| - n + 1 + |X_f~|; throws for non-basic graphs.
int n1_complexity(const MarkedGraph& g);

/// Every Boltzmann edge of a basic graph joins vertices that are not
/// adjacent in R(G).
bool boltzmann_edges_nonadjacent(const MarkedGraph& g);

struct CanonicalKey {
  int order = 0;
  EdgeMask mayer = 0;
  EdgeMask boltzmann = 0;

  std::string bytes() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr int kMaxCanonicalOrder = 9;

/// Lexicographic minimum of (mayer, boltzmann) over all n! relabelings.
/// With `fix_root`, only relabelings fixing vertex 1 are tried.
CanonicalKey canonical_form(const MarkedGraph& g, bool fix_root = false);

/// Relabeling of V_n; perm[v] is the image of vertex v (perm[0] unused).
using Relabeling = std::vector<int>;

EdgeMask relabel(EdgeMask m, const Relabeling& perm);

/// Precomputed bit maps for every relabeling of V_n, for callers that
/// sweep whole orbits.
class RelabelingTable {
 public:
  RelabelingTable(int n, bool fix_root);

  int order() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Relabeling& perm(std::size_t k) const { return perms_[k]; }
  EdgeMask apply(std::size_t k, EdgeMask m) const;

 private:
  int n_;
  std::vector<Relabeling> perms_;
  std::vector<std::uint8_t> bit_maps_;  // size() * pair_count(n_)
};

/// `n=<int>; f=<i-j,...>; ft=<i-j,...>`
std::string format_graph(const MarkedGraph& g);
MarkedGraph parse_graph(const std::string& line);

std::string format_edges(EdgeMask m);
EdgeMask parse_edges(const std::string& text);

}  // namespace mayer
