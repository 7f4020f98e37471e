#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mayer/common.hpp"
#include "mayer/graph.hpp"

namespace mayer {

/// Labeled tree on {1..n} rooted at vertex 1, held as a parent array.
class RootedLabeledTree {
 public:
  /// `parents[k]` is the parent of vertex k+2.
  explicit RootedLabeledTree(std::span<const int> parents);

  int order() const { return n_; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  int height() const { return height_; }
  int child_count(int v) const { return children_[v]; }
  /// Tree degree: children plus the parent edge for non-root vertices.
  int degree(int v) const { return children_[v] + (v == 1 ? 0 : 1); }
  EdgeMask edges() const { return edges_; }
  std::vector<int> parents() const;
  /// layers()[i] holds the vertices at depth i in increasing label order.
  std::vector<std::vector<int>> layers() const;

  friend bool operator==(const RootedLabeledTree& a, const RootedLabeledTree& b) {
    return a.n_ == b.n_ && a.parent_ == b.parent_;
  }

 private:
  int n_ = 0;
  int height_ = 0;
  EdgeMask edges_ = 0;
  std::array<std::int8_t, kMaxOrder + 1> parent_{};
  std::array<std::int8_t, kMaxOrder + 1> depth_{};
  std::array<std::int8_t, kMaxOrder + 1> children_{};
};

/// Strategy deciding which non-tree pairs carry Boltzmann factors.
class AdmissibleRule {
 public:
  virtual ~AdmissibleRule() = default;
  virtual EdgeMask admissible(const RootedLabeledTree& t) const = 0;
  virtual std::string name() const = 0;
};

/// Breadth-first minimal-parent partition scheme: a non-tree pair is
/// admissible iff both ends share a depth, or their depths differ by one
/// and the shallower end has a larger label than the deeper end's parent.
class MinimalParentRule final : public AdmissibleRule {
 public:
  EdgeMask admissible(const RootedLabeledTree& t) const override;
  std::string name() const override { return "minimal-parent"; }
};

const AdmissibleRule& default_rule();

/// X_ad(t), checked against its tree at construction.
class AdmissibleEdgeSet {
 public:
  AdmissibleEdgeSet(const RootedLabeledTree& t, EdgeMask edges);

  EdgeMask edges() const { return edges_; }
  int size() const { return popcount(edges_); }

 private:
  EdgeMask edges_;
};

AdmissibleEdgeSet admissible_edges(const RootedLabeledTree& t,
                                   const AdmissibleRule& rule = default_rule());

/// Tree edges as Mayer edges, admissible pairs as Boltzmann edges.
MarkedGraph marked_graph(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad);

inline constexpr int kMaxTreeEnumeration = 9;
inline constexpr int kMaxClassEnumeration = 9;

/// Calls `visit` once for every labeled tree in T_n (Pruefer order).
void for_each_tree(int n, const std::function<void(const RootedLabeledTree&)>& visit);
std::vector<RootedLabeledTree> enumerate_trees(int n);

/// |TI(t)| = (n-1)! / (prod_{i<H} n(t,i)! * prod_{v at depth H-1} (d(v)-1)!).
Integer class_size(const RootedLabeledTree& t);

struct TreeClass {
  RootedLabeledTree tree;  // representative: minimal (f, ft) key in the class
  AdmissibleEdgeSet ad;
  Integer size;            // counted members of the class
};

/// Key of the maximal-isomorphism class of t: tree and admissible edges
/// after relabeling every layer but the last in label order and the last
/// layer grouped by parent. Two trees share a class iff a root-fixing
/// relabeling that keeps label order inside each non-final layer maps one
/// onto the other together with its admissible edges.
std::pair<EdgeMask, EdgeMask> tree_class_key(const RootedLabeledTree& t,
                                             const AdmissibleRule& rule = default_rule());
/// Same key for an already computed admissible set.
std::pair<EdgeMask, EdgeMask> tree_class_key(const RootedLabeledTree& t, EdgeMask ad);

/// One representative per maximal-isomorphism class of T_n, ordered by
/// representative key.
std::vector<TreeClass> enumerate_tr(int n, const AdmissibleRule& rule = default_rule());

/// Closed-form |TR(n)|.
Integer count_tr(int n);
/// Closed-form |TR(n,0)|.
Integer count_tr0(int n);

/// Membership in T(n,0): every layer other than the root layer and the
/// last has at least two vertices, and no non-root layer has its
/// highest-labeled vertex as the only one with degree above one.
bool in_t_n0(const RootedLabeledTree& t);

/// `n=<int>; parents=<p2,...,pn>; ad=<i-j,...>`
std::string format_tree(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad);
std::pair<RootedLabeledTree, AdmissibleEdgeSet> parse_tree(const std::string& line);

}  // namespace mayer
