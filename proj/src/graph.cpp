#include "mayer/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace mayer {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    throw ValidationError("vertex count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxOrder));
}

void check_range(int n, EdgeMask edges) {
  check_order(n);
  if ((edges & ~all_pairs(n)) != 0)
    throw ValidationError("edge endpoint exceeds vertex count " + std::to_string(n));
}

// Vertices reachable from the lowest vertex of `alive`, using only vertices in `alive`.
std::uint32_t reach(const std::array<std::uint32_t, kMaxOrder + 1>& adj,
                    std::uint32_t alive) {
  if (alive == 0) return 0;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= adj[std::countr_zero(f) + 1];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::uint32_t vertex_set(int n) { return (std::uint32_t{1} << n) - 1; }

}  // namespace

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw ValidationError("edge endpoints must differ: " + std::to_string(a));
  if (u < 1) throw ValidationError("vertex labels are positive integers");
  if (v > kMaxOrder) throw ValidationError("vertex label " + std::to_string(v) + " too large");
}

Edge Edge::at(int index) {
  static const auto table = [] {
    std::array<Edge, pair_count(kMaxOrder)> t{};
    for (int j = 2; j <= kMaxOrder; ++j)
      for (int i = 1; i < j; ++i) {
        Edge& e = t[pair_count(j - 1) + i - 1];
        e.u = i;
        e.v = j;
      }
    return t;
  }();
  return table.at(index);
}

int popcount(EdgeMask m) { return std::popcount(m); }

EdgeMask mask_of(std::span<const Edge> edges) {
  EdgeMask m = 0;
  for (const Edge& e : edges) m |= EdgeMask{1} << e.index();
  return m;
}

std::vector<Edge> edges_of(EdgeMask m) {
  std::vector<Edge> out;
  out.reserve(popcount(m));
  for (; m; m &= m - 1) out.push_back(Edge::at(std::countr_zero(m)));
  return out;
}

std::array<std::uint32_t, kMaxOrder + 1> adjacency(int n, EdgeMask edges) {
  check_range(n, edges);
  std::array<std::uint32_t, kMaxOrder + 1> adj{};
  for (EdgeMask m = edges; m; m &= m - 1) {
    const Edge e = Edge::at(std::countr_zero(m));
    adj[e.u] |= std::uint32_t{1} << (e.v - 1);
    adj[e.v] |= std::uint32_t{1} << (e.u - 1);
  }
  return adj;
}

bool is_connected(int n, EdgeMask edges) {
  const auto adj = adjacency(n, edges);
  return reach(adj, vertex_set(n)) == vertex_set(n);
}

bool is_connected(int n, std::span<const Edge> edges) {
  return is_connected(n, mask_of(edges));
}

bool is_biconnected(int n, EdgeMask edges) {
  if (n < 2) throw ValidationError("biconnectivity needs at least two vertices");
  const auto adj = adjacency(n, edges);
  const std::uint32_t all = vertex_set(n);
  if (reach(adj, all) != all) return false;
  if (n == 2) return true;
  for (int v = 1; v <= n; ++v) {
    const std::uint32_t rest = all & ~(std::uint32_t{1} << (v - 1));
    if (reach(adj, rest) != rest) return false;
  }
  return true;
}

bool is_biconnected(int n, std::span<const Edge> edges) {
  return is_biconnected(n, mask_of(edges));
}

MarkedGraph::MarkedGraph(int order, EdgeMask mayer, EdgeMask boltzmann)
    : order_(order), mayer_(mayer), boltzmann_(boltzmann) {
  if (order < 2) throw ValidationError("a marked graph needs at least two vertices");
  check_range(order, mayer | boltzmann);
  if (mayer & boltzmann)
    throw ValidationError("Mayer and Boltzmann edge sets overlap at " +
                          format_edges(mayer & boltzmann));
  std::uint32_t covered = 0;
  for (EdgeMask m = mayer | boltzmann; m; m &= m - 1) {
    const Edge e = Edge::at(std::countr_zero(m));
    covered |= (std::uint32_t{1} << (e.u - 1)) | (std::uint32_t{1} << (e.v - 1));
  }
  if (covered != vertex_set(order))
    throw ValidationError("edge endpoints do not cover {1.." + std::to_string(order) + "}");
}

MarkedGraph MarkedGraph::from_edges(int order, std::span<const Edge> mayer,
                                    std::span<const Edge> boltzmann) {
  return MarkedGraph(order, mask_of(mayer), mask_of(boltzmann));
}

Subgraph mayer_subgraph(const MarkedGraph& g) {
  return {g.order(), edges_of(g.mayer())};
}

int n1_complexity(const MarkedGraph& g) {
  if (!g.is_basic()) throw ValidationError("N1 is defined for basic graphs only");
  return g.mayer_count() - g.order() + 1 + g.boltzmann_count();
}

bool boltzmann_edges_nonadjacent(const MarkedGraph& g) {
  // Disjointness of the two sets is exactly this property.
  return (g.mayer() & g.boltzmann()) == 0;
}

std::string CanonicalKey::bytes() const {
  std::string out;
  out.push_back(static_cast<char>(order));
  for (EdgeMask m : {mayer, boltzmann})
    for (int shift = 56; shift >= 0; shift -= 8)
      out.push_back(static_cast<char>((m >> shift) & 0xff));
  return out;
}

EdgeMask relabel(EdgeMask m, const Relabeling& perm) {
  static const auto ends = [] {
    std::array<std::array<std::uint8_t, 2>, pair_count(kMaxOrder)> t{};
    for (int k = 0; k < pair_count(kMaxOrder); ++k) {
      const Edge e = Edge::at(k);
      t[k] = {static_cast<std::uint8_t>(e.u), static_cast<std::uint8_t>(e.v)};
    }
    return t;
  }();
  if (m & ~all_pairs(static_cast<int>(perm.size()) - 1))
    throw ValidationError("relabeling does not cover the edge set");
  EdgeMask out = 0;
  for (; m; m &= m - 1) {
    const auto& e = ends[std::countr_zero(m)];
    out |= EdgeMask{1} << pair_index(perm[e[0]], perm[e[1]]);
  }
  return out;
}

RelabelingTable::RelabelingTable(int n, bool fix_root) : n_(n) {
  check_order(n);
  const int pairs = pair_count(n);
  Relabeling perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  const auto first = perm.begin() + (fix_root ? 2 : 1);
  do {
    perms_.push_back(perm);
    for (int k = 0; k < pairs; ++k) {
      const Edge e = Edge::at(k);
      bit_maps_.push_back(static_cast<std::uint8_t>(Edge(perm[e.u], perm[e.v]).index()));
    }
  } while (std::next_permutation(first, perm.end()));
}

EdgeMask RelabelingTable::apply(std::size_t k, EdgeMask m) const {
  const std::uint8_t* map = bit_maps_.data() + k * pair_count(n_);
  EdgeMask out = 0;
  for (; m; m &= m - 1) out |= EdgeMask{1} << map[std::countr_zero(m)];
  return out;
}

CanonicalKey canonical_form(const MarkedGraph& g, bool fix_root) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw BudgetError("canonical form supports n <= " + std::to_string(kMaxCanonicalOrder));
  const int pairs = pair_count(n);
  Relabeling perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  const auto first = perm.begin() + (fix_root ? 2 : 1);
  std::vector<int> map(pairs);
  CanonicalKey best{n, g.mayer(), g.boltzmann()};
  do {
    for (int k = 0; k < pairs; ++k) {
      const Edge e = Edge::at(k);
      map[k] = Edge(perm[e.u], perm[e.v]).index();
    }
    auto image = [&](EdgeMask m) {
      EdgeMask out = 0;
      for (; m; m &= m - 1) out |= EdgeMask{1} << map[std::countr_zero(m)];
      return out;
    };
    const CanonicalKey key{n, image(g.mayer()), image(g.boltzmann())};
    if (key < best) best = key;
  } while (std::next_permutation(first, perm.end()));
  return best;
}

std::string format_edges(EdgeMask m) {
  std::string out;
  for (const Edge& e : edges_of(m)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

EdgeMask parse_edges(const std::string& text) {
  EdgeMask m = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ValidationError("edge must be i-j: '" + item + "'");
    const Edge e(parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1)));
    const EdgeMask bit = EdgeMask{1} << e.index();
    if (m & bit) throw ValidationError("repeated edge " + item);
    m |= bit;
  }
  return m;
}

std::string format_graph(const MarkedGraph& g) {
  return "n=" + std::to_string(g.order()) + "; f=" + format_edges(g.mayer()) +
         "; ft=" + format_edges(g.boltzmann());
}

MarkedGraph parse_graph(const std::string& line) {
  const auto fields = parse_fields(line);
  const auto get = [&](const char* key) -> std::string {
    const auto it = fields.find(key);
    return it == fields.end() ? std::string{} : it->second;
  };
  if (!fields.contains("n") || !fields.contains("f"))
    throw ValidationError("graph record needs n= and f= fields: '" + line + "'");
  for (const auto& [key, value] : fields)
    if (key != "n" && key != "f" && key != "ft")
      throw ValidationError("unknown graph field '" + key + "'");
  return MarkedGraph(parse_int(get("n")), parse_edges(get("f")), parse_edges(get("ft")));
}

}  // namespace mayer
