#include "mayer/trees.hpp"

#include "mayer/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace mayer {

RootedLabeledTree::RootedLabeledTree(std::span<const int> parents)
    : n_(static_cast<int>(parents.size()) + 1) {
  if (n_ < 2 || n_ > kMaxOrder)
    throw ValidationError("tree order " + std::to_string(n_) + " outside 2.." +
                          std::to_string(kMaxOrder));
  parent_[1] = 0;
  for (int v = 2; v <= n_; ++v) {
    const int p = parents[v - 2];
    if (p < 1 || p > n_ || p == v)
      throw ValidationError("bad parent " + std::to_string(p) + " for vertex " +
                            std::to_string(v));
    parent_[v] = static_cast<std::int8_t>(p);
  }
  for (int v = 2; v <= n_; ++v) {
    int d = 0;
    for (int u = v; u != 1; u = parent_[u])
      if (++d > n_) throw ValidationError("parent array contains a cycle");
    depth_[v] = static_cast<std::int8_t>(d);
    height_ = std::max(height_, d);
    ++children_[parent_[v]];
    edges_ |= EdgeMask{1} << Edge(v, parent_[v]).index();
  }
}

std::vector<int> RootedLabeledTree::parents() const {
  std::vector<int> out;
  for (int v = 2; v <= n_; ++v) out.push_back(parent_[v]);
  return out;
}

std::vector<std::vector<int>> RootedLabeledTree::layers() const {
  std::vector<std::vector<int>> out(height_ + 1);
  for (int v = 1; v <= n_; ++v) out[depth_[v]].push_back(v);
  return out;
}

EdgeMask MinimalParentRule::admissible(const RootedLabeledTree& t) const {
  EdgeMask out = 0;
  const int n = t.order();
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      const EdgeMask bit = EdgeMask{1} << pair_index(u, v);
      if (t.edges() & bit) continue;
      const int du = t.depth(u);
      const int dv = t.depth(v);
      bool ok = false;
      if (du == dv) {
        ok = true;
      } else if (du + 1 == dv) {
        ok = u > t.parent(v);
      } else if (dv + 1 == du) {
        ok = v > t.parent(u);
      }
      if (ok) out |= bit;
    }
  }
  return out;
}

const AdmissibleRule& default_rule() {
  static const MinimalParentRule rule;
  return rule;
}

AdmissibleEdgeSet::AdmissibleEdgeSet(const RootedLabeledTree& t, EdgeMask edges)
    : edges_(edges) {
  if ((edges & ~all_pairs(t.order())) != 0)
    throw ValidationError("admissible edge outside the tree's vertex set");
  if (edges & t.edges())
    throw ValidationError("admissible edge coincides with a tree edge: " +
                          format_edges(edges & t.edges()));
}

AdmissibleEdgeSet admissible_edges(const RootedLabeledTree& t, const AdmissibleRule& rule) {
  return AdmissibleEdgeSet(t, rule.admissible(t));
}

MarkedGraph marked_graph(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad) {
  return MarkedGraph(t.order(), t.edges(), ad.edges());
}

namespace {

void check_enumeration_order(int n, int limit, const char* what) {
  if (n < 2 || n > limit)
    throw BudgetError(std::string(what) + " supports 2 <= n <= " + std::to_string(limit) +
                      ", got " + std::to_string(n));
}

// Decodes a Pruefer sequence into parents rooted at vertex 1.
std::array<int, kMaxOrder> pruefer_parents(int n, const std::vector<int>& seq) {
  std::array<int, kMaxOrder + 1> degree{};
  std::array<std::uint32_t, kMaxOrder + 1> adj{};
  for (int v = 1; v <= n; ++v) degree[v] = 1;
  for (int x : seq) ++degree[x];
  auto link = [&](int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  };
  for (int x : seq) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    link(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = 0;
  int b = 0;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) (a == 0 ? a : b) = v;
  link(a, b);

  std::array<int, kMaxOrder> parents{};
  std::uint32_t seen = 1u << 1;
  int queue[kMaxOrder + 1] = {1};
  for (int head = 0, tail = 1; head < tail; ++head) {
    const int u = queue[head];
    for (std::uint32_t rest = adj[u] & ~seen; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      seen |= 1u << w;
      parents[w - 2] = u;
      queue[tail++] = w;
    }
  }
  return parents;
}

}  // namespace

void for_each_tree(int n, const std::function<void(const RootedLabeledTree&)>& visit) {
  check_enumeration_order(n, kMaxTreeEnumeration, "tree enumeration");
  if (n == 2) {
    const int p[] = {1};
    visit(RootedLabeledTree(p));
    return;
  }
  std::vector<int> seq(n - 2, 1);
  while (true) {
    const auto parents = pruefer_parents(n, seq);
    visit(RootedLabeledTree(std::span<const int>(parents.data(), n - 1)));
    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
}

std::vector<RootedLabeledTree> enumerate_trees(int n) {
  std::vector<RootedLabeledTree> out;
  for_each_tree(n, [&](const RootedLabeledTree& t) { out.push_back(t); });
  return out;
}

Integer class_size(const RootedLabeledTree& t) {
  const int h = t.height();
  const auto layers = t.layers();
  Integer denom = 1;
  for (int i = 1; i <= h - 1; ++i) denom *= factorial(static_cast<int>(layers[i].size()));
  for (int v : layers[h - 1]) denom *= factorial(t.child_count(v));
  return factorial(t.order() - 1) / denom;
}

std::pair<EdgeMask, EdgeMask> tree_class_key(const RootedLabeledTree& t, EdgeMask ad) {
  const int n = t.order();
  const int h = t.height();
  Relabeling rank(n + 1, 0);
  int next = 1;
  for (int d = 0; d < h; ++d)
    for (int v = 1; v <= n; ++v)
      if (t.depth(v) == d) rank[v] = next++;
  // Last layer: grouped by parent rank, label order inside a group.
  for (int r = 1; r < next; ++r)
    for (int v = 1; v <= n; ++v)
      if (t.depth(v) == h && rank[t.parent(v)] == r) rank[v] = next++;
  return {relabel(t.edges(), rank), relabel(ad, rank)};
}

std::pair<EdgeMask, EdgeMask> tree_class_key(const RootedLabeledTree& t,
                                             const AdmissibleRule& rule) {
  return tree_class_key(t, rule.admissible(t));
}

std::vector<TreeClass> enumerate_tr(int n, const AdmissibleRule& rule) {
  check_enumeration_order(n, kMaxClassEnumeration, "class enumeration");
  struct Found {
    std::pair<EdgeMask, EdgeMask> key;
    RootedLabeledTree tree;
    EdgeMask ad;
    Integer size;
  };
  std::map<std::pair<EdgeMask, EdgeMask>, Found> classes;
  for_each_tree(n, [&](const RootedLabeledTree& t) {
    const EdgeMask ad = rule.admissible(t);
    const std::pair<EdgeMask, EdgeMask> own{t.edges(), ad};
    auto [it, fresh] = classes.try_emplace(tree_class_key(t, ad), Found{own, t, ad, 0});
    Found& c = it->second;
    ++c.size;
    if (!fresh && own < c.key) {
      c.key = own;
      c.tree = t;
      c.ad = ad;
    }
  });

  std::vector<Found> found;
  found.reserve(classes.size());
  for (auto& [key, c] : classes) found.push_back(std::move(c));
  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.key < b.key; });
  std::vector<TreeClass> out;
  out.reserve(found.size());
  for (auto& f : found)
    out.push_back(TreeClass{f.tree, AdmissibleEdgeSet(f.tree, f.ad), std::move(f.size)});
  return out;
}

namespace {

// Multisets of size k drawn from m kinds: (m+k-1)! / (k! (m-1)!).
Integer last_layer_choices(int above, int last) {
  return factorial(above + last - 1) / (factorial(last) * factorial(above - 1));
}

}  // namespace

Integer count_tr(int n) {
  if (n < 2) throw ValidationError("count_tr needs n >= 2");
  Integer total = 1 + (ipow(2, n - 2) - 1);
  for (int h = 3; h <= n - 1; ++h) {
    for (const auto& layer : compositions(n - 1, h)) {
      Integer term = last_layer_choices(layer[h - 2], layer[h - 1]);
      for (int i = 2; i <= h - 1; ++i) term *= ipow(layer[i - 2], layer[i - 1]);
      total += term;
    }
  }
  return total;
}

Integer count_tr0(int n) {
  if (n < 2) throw ValidationError("count_tr0 needs n >= 2");
  const int top = (n + 1) / 2;
  auto admissible_layers = [](const std::vector<int>& layer) {
    for (std::size_t i = 0; i + 1 < layer.size(); ++i)
      if (layer[i] < 2) return false;
    return true;
  };
  Integer total = 1;
  for (int h = 2; h <= top; ++h) {
    for (const auto& layer : compositions(n - 1, h)) {
      if (!admissible_layers(layer)) continue;
      Integer term = last_layer_choices(layer[h - 2], layer[h - 1]) - 1;
      for (int i = 2; i <= h - 1; ++i) term *= ipow(layer[i - 2], layer[i - 1]) - 1;
      total += term;
    }
  }
  return total;
}

bool in_t_n0(const RootedLabeledTree& t) {
  const auto layers = t.layers();
  const int h = t.height();
  for (int i = 1; i <= h - 1; ++i)
    if (layers[i].size() < 2) return false;
  for (int i = 1; i <= h; ++i) {
    int branching = 0;
    int branching_vertex = 0;
    for (int v : layers[i])
      if (t.degree(v) > 1) {
        ++branching;
        branching_vertex = v;
      }
    if (branching == 1 && branching_vertex == layers[i].back()) return false;
  }
  return true;
}

std::string format_tree(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad) {
  std::string parents;
  for (int p : t.parents()) {
    if (!parents.empty()) parents += ',';
    parents += std::to_string(p);
  }
  return "n=" + std::to_string(t.order()) + "; parents=" + parents +
         "; ad=" + format_edges(ad.edges());
}

std::pair<RootedLabeledTree, AdmissibleEdgeSet> parse_tree(const std::string& line) {
  const auto fields = parse_fields(line);
  for (const char* key : {"n", "parents"})
    if (!fields.contains(key))
      throw ValidationError(std::string("tree record missing ") + key + "=: '" + line + "'");
  for (const auto& [key, value] : fields)
    if (key != "n" && key != "parents" && key != "ad")
      throw ValidationError("unknown tree field '" + key + "'");
  const int n = parse_int(fields.at("n"));
  std::vector<int> parents;
  std::stringstream in(fields.at("parents"));
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) parents.push_back(parse_int(item));
  if (static_cast<int>(parents.size()) != n - 1)
    throw ValidationError("tree record lists " + std::to_string(parents.size()) +
                          " parents for n=" + std::to_string(n));
  RootedLabeledTree t(parents);
  const auto ad_it = fields.find("ad");
  const EdgeMask ad = ad_it == fields.end() ? 0 : parse_edges(ad_it->second);
  return {t, AdmissibleEdgeSet(t, ad)};
}

}  // namespace mayer
