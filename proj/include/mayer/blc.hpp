#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mayer/common.hpp"
#include "mayer/graph.hpp"

namespace mayer {

struct Term {
  Rational coefficient;
  MarkedGraph graph;
};

/// prefactor * sum_k coefficient_k * I(G_k) over basic graphs of one order.
class BasicLinearCombination {
 public:
  BasicLinearCombination(int order, Rational prefactor, std::string provenance);

  /// Rejects graphs of another order and graphs that are not basic.
  void add(Rational coefficient, MarkedGraph graph);

  int order() const { return order_; }
  const Rational& prefactor() const { return prefactor_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size(); }

 private:
  int order_;
  Rational prefactor_;
  std::string provenance_;
  std::vector<Term> terms_;
};

inline constexpr int kMaxGraphSumOrder = 6;
inline constexpr int kMaxReeHooverOrder = 7;
inline constexpr int kMaxTreeSumOrder = 9;

/// b_n = (1/n!) sum over connected labeled graphs of prod f.
BasicLinearCombination mayer_bn_blc(int n);
/// B_n = -((n-1)/n!) sum over labeled blocks of prod f.
BasicLinearCombination virial_block_blc(int n);
/// b_n as the class-reduced tree sum: one term per TR(n) representative
/// weighted by its class size.
BasicLinearCombination tree_sum_bn_blc(int n);
/// a_n: the tree sum restricted to representatives in T(n,0).
BasicLinearCombination tree_sum_an_blc(int n);
/// b_n as the sum over every labeled tree in T_n (coefficient 1 each).
BasicLinearCombination tree_sum_all_blc(int n);

/// Ree-Hoover weight of every Mayer edge set E on the complete graph:
/// c(E) = sum over blocks F within E of (-1)^{|E \ F|}. Indexed by E.
std::vector<std::int32_t> ree_hoover_coefficients(int n);

struct ReeHooverClass {
  EdgeMask mayer;        // canonical representative (minimal Mayer mask)
  std::int64_t weight;   // c(E) of each labeled member
  std::int64_t members;  // number of labeled diagrams in the class
};

/// Topologically distinct diagrams with nonzero weight, in canonical order.
std::vector<ReeHooverClass> ree_hoover_classes(int n);

/// One term per distinct diagram, coefficient weight * members.
BasicLinearCombination ree_hoover_blc(int n);
/// One term per labeled diagram with nonzero weight.
BasicLinearCombination ree_hoover_labeled_blc(int n);

/// Ingested frame-cycle ensembles: pairs (cycle-union edges, admissible edges).
struct FrameSumRecord {
  int order = 0;
  std::vector<std::pair<EdgeMask, EdgeMask>> ensembles;
};

/// Validates each ensemble (biconnected cycle union on V_n, disjoint
/// admissible set, endpoints covering V_n) and builds the frame sum.
BasicLinearCombination load_frame_sum(const FrameSumRecord& record);

/// One line per ensemble: `n=<int>; s=<i-j,...>; ad=<i-j,...>`.
FrameSumRecord parse_frame_sum(const std::string& text);
std::string format_frame_sum(const FrameSumRecord& record);

/// `{order, prefactor:{num,den}, provenance, terms:[{coeff:{num,den}, f:["i-j",...], ft:[...]}]}`
std::string blc_to_json(const BasicLinearCombination& blc, int indent = -1);
BasicLinearCombination blc_from_json(const std::string& text);

/// Reference lengths of the frame sums for n = 2..6.
inline constexpr long long kFrameSumLengths[] = {1, 1, 5, 49, 784};

}  // namespace mayer
