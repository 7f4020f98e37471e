#include "mayer/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "mayer/trees.hpp"

namespace mayer {

FormalPolynomial::FormalPolynomial(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder)
    throw ValidationError("polynomial order " + std::to_string(order) + " outside 1.." +
                          std::to_string(kMaxOrder));
}

void FormalPolynomial::add(EdgeMask monomial, std::int64_t coefficient) {
  if (monomial & ~all_pairs(order_))
    throw ValidationError("monomial uses an edge outside V_" + std::to_string(order_));
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.try_emplace(monomial, 0);
  if (__builtin_add_overflow(it->second, coefficient, &it->second))
    throw BudgetError("polynomial coefficient overflows 64 bits");
  if (it->second == 0) terms_.erase(it);
}

void FormalPolynomial::add_scaled(const FormalPolynomial& other, std::int64_t factor) {
  if (other.order_ != order_) throw ValidationError("polynomial orders differ");
  for (const auto& [m, c] : other.terms_) {
    std::int64_t scaled;
    if (__builtin_mul_overflow(c, factor, &scaled))
      throw BudgetError("polynomial coefficient overflows 64 bits");
    add(m, scaled);
  }
}

std::int64_t FormalPolynomial::coefficient(EdgeMask monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

bool monomial_less(EdgeMask a, EdgeMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

std::vector<std::pair<EdgeMask, std::int64_t>> FormalPolynomial::sorted() const {
  std::vector<std::pair<EdgeMask, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return out;
}

Rational FormalPolynomial::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) < pair_count(order_))
    throw ValidationError("need one value per vertex pair");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational product = c;
    for (EdgeMask rest = m; rest; rest &= rest - 1) product *= values[std::countr_zero(rest)];
    total += product;
  }
  return total;
}

std::string format_monomial(EdgeMask monomial, int order) {
  if (monomial == 0) return "1";
  const bool wide = order > 9;
  std::string out;
  for (const auto& e : edges_of(monomial)) {
    if (!out.empty()) out += '*';
    out += 'f' + std::to_string(e.u) + (wide ? "_" : "") + std::to_string(e.v);
  }
  return out;
}

std::string to_string(const FormalPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p.sorted()) {
    const bool negative = c < 0;
    const std::int64_t magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m == 0)
      out += std::to_string(magnitude);
    else if (magnitude == 1)
      out += format_monomial(m, p.order());
    else
      out += std::to_string(magnitude) + "*" + format_monomial(m, p.order());
  }
  return out;
}

FormalPolynomial expand_term(const MarkedGraph& g) {
  if (g.boltzmann_count() > kMaxBoltzmannExpansion)
    throw BudgetError("expansion of " + std::to_string(g.boltzmann_count()) +
                      " Boltzmann edges exceeds the limit of " +
                      std::to_string(kMaxBoltzmannExpansion));
  FormalPolynomial out(g.order());
  const EdgeMask ft = g.boltzmann();
  // Every submask of ft, including the empty one.
  EdgeMask sub = ft;
  while (true) {
    out.add(g.mayer() | sub, 1);
    if (sub == 0) break;
    sub = (sub - 1) & ft;
  }
  return out;
}

FormalPolynomial expand_blc(const BasicLinearCombination& blc) {
  FormalPolynomial out(blc.order());
  for (const auto& t : blc.terms()) {
    if (denominator(t.coefficient) != 1)
      throw ValidationError("formal expansion needs integer coefficients, got " +
                            to_string(t.coefficient));
    const Integer& c = numerator(t.coefficient);
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw BudgetError("term coefficient exceeds 64 bits");
    out.add_scaled(expand_term(t.graph), static_cast<std::int64_t>(c));
  }
  return out;
}

IdentityResult verify_identity(const FormalPolynomial& lhs, const FormalPolynomial& rhs) {
  if (lhs.order() != rhs.order())
    throw ValidationError("cannot compare polynomials of order " + std::to_string(lhs.order()) +
                          " and " + std::to_string(rhs.order()));
  IdentityResult r;
  std::optional<EdgeMask> first;
  auto consider = [&](EdgeMask m) {
    if (lhs.coefficient(m) != rhs.coefficient(m) && (!first || monomial_less(m, *first)))
      first = m;
  };
  for (const auto& [m, c] : lhs.terms()) consider(m);
  for (const auto& [m, c] : rhs.terms()) consider(m);
  r.equal = !first;
  if (first) {
    r.witness = first;
    r.lhs_coefficient = lhs.coefficient(*first);
    r.rhs_coefficient = rhs.coefficient(*first);
  }
  return r;
}

namespace {

void check_identity_order(int n, int limit, const std::string& what) {
  if (n < 2 || n > limit)
    throw BudgetError(what + " identity supports 2 <= n <= " + std::to_string(limit) + ", got " +
                      std::to_string(n));
}

IdentityReport compare(const std::string& identity, int n, const BasicLinearCombination& lhs,
                       const BasicLinearCombination& rhs) {
  IdentityReport report{identity, n, false, {}, {}};
  if (lhs.prefactor() != rhs.prefactor()) {
    report.notes.push_back("prefactors differ: " + to_string(lhs.prefactor()) + " vs " +
                           to_string(rhs.prefactor()));
    return report;
  }
  const auto a = expand_blc(lhs);
  const auto b = expand_blc(rhs);
  report.result = verify_identity(a, b);
  report.holds = report.result.equal;
  report.notes.push_back(lhs.provenance() + ": " + std::to_string(lhs.length()) + " terms, " +
                         std::to_string(a.size()) + " monomials");
  report.notes.push_back(rhs.provenance() + ": " + std::to_string(rhs.length()) + " terms, " +
                         std::to_string(b.size()) + " monomials");
  return report;
}

// Minimal (mayer, boltzmann) image under all relabelings, memoized.
class Canonicalizer {
 public:
  explicit Canonicalizer(int n) : perms_(n, false) {}

  std::pair<EdgeMask, EdgeMask> operator()(EdgeMask f, EdgeMask ft) {
    const auto key = std::make_pair(f, ft);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto best = key;
    for (std::size_t k = 0; k < perms_.size(); ++k)
      best = std::min(best, std::make_pair(perms_.apply(k, f), perms_.apply(k, ft)));
    cache_.emplace(key, best);
    return best;
  }

 private:
  RelabelingTable perms_;
  std::map<std::pair<EdgeMask, EdgeMask>, std::pair<EdgeMask, EdgeMask>> cache_;
};

using ClassCount = std::map<std::pair<EdgeMask, EdgeMask>, Integer>;

bool same_counts(const ClassCount& a, const ClassCount& b, std::string& difference) {
  for (const auto& [key, count] : a) {
    const auto it = b.find(key);
    const Integer other = it == b.end() ? Integer(0) : it->second;
    if (other != count) {
      difference = "class f=" + format_edges(key.first) + " ft=" + format_edges(key.second) +
                   ": " + count.str() + " vs " + other.str();
      return false;
    }
  }
  for (const auto& [key, count] : b)
    if (!a.contains(key)) {
      difference = "class f=" + format_edges(key.first) + " ft=" + format_edges(key.second) +
                   ": 0 vs " + count.str();
      return false;
    }
  return true;
}

}  // namespace

IdentityReport check_tree_identity(int n) {
  check_identity_order(n, kMaxIdentityOrder, "tree");
  return compare("tree", n, tree_sum_all_blc(n), mayer_bn_blc(n));
}

IdentityReport check_ree_hoover_identity(int n) {
  check_identity_order(n, kMaxIdentityOrder, "rh");
  return compare("rh", n, ree_hoover_labeled_blc(n), virial_block_blc(n));
}

IdentityReport partition_identity_check(int n) {
  check_identity_order(n, kMaxIdentityOrder, "partition");
  IdentityReport report = compare("partition", n, tree_sum_all_blc(n), mayer_bn_blc(n));
  if (!report.holds) {
    report.notes.push_back("all-trees sum differs from the connected sum");
    return report;
  }

  Canonicalizer canon(n);
  ClassCount graphs_all, graphs_reduced, monomials_all, monomials_reduced;
  auto record = [&](const MarkedGraph& g, const Integer& weight, ClassCount& graphs,
                    ClassCount& monomials) {
    graphs[canon(g.mayer(), g.boltzmann())] += weight;
    const auto expansion = expand_term(g);
    for (const auto& [m, c] : expansion.terms()) monomials[canon(m, 0)] += weight * c;
  };
  for_each_tree(n, [&](const RootedLabeledTree& t) {
    record(marked_graph(t, admissible_edges(t)), 1, graphs_all, monomials_all);
  });
  const auto reduced = tree_sum_bn_blc(n);
  for (const auto& term : reduced.terms())
    record(term.graph, numerator(term.coefficient), graphs_reduced, monomials_reduced);

  std::string difference;
  if (!same_counts(graphs_reduced, graphs_all, difference)) {
    report.holds = false;
    report.notes.push_back("marked tree graphs per class differ: " + difference);
    return report;
  }
  if (!same_counts(monomials_reduced, monomials_all, difference)) {
    report.holds = false;
    report.notes.push_back("monomials per class differ: " + difference);
    return report;
  }
  report.notes.push_back(std::to_string(graphs_all.size()) + " marked-graph classes and " +
                         std::to_string(monomials_all.size()) +
                         " monomial classes agree between reduced and full tree sums");
  return report;
}

}  // namespace mayer
