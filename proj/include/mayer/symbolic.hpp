#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mayer/blc.hpp"
#include "mayer/graph.hpp"

namespace mayer {

/// Multilinear polynomial in the edge indeterminates f_ij of V_n with
/// integer coefficients. A monomial is the set of its edges.
class FormalPolynomial {
 public:
  explicit FormalPolynomial(int order);

  int order() const { return order_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds `coefficient` to the monomial; throws on int64 overflow.
  void add(EdgeMask monomial, std::int64_t coefficient);
  void add_scaled(const FormalPolynomial& other, std::int64_t factor);
  std::int64_t coefficient(EdgeMask monomial) const;

  const std::unordered_map<EdgeMask, std::int64_t>& terms() const { return terms_; }
  /// Monomials ordered by degree, then by mask.
  std::vector<std::pair<EdgeMask, std::int64_t>> sorted() const;

  /// Value at f_e = values[e.index()].
  Rational evaluate(std::span<const Rational> values) const;

  friend bool operator==(const FormalPolynomial& a, const FormalPolynomial& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  int order_;
  std::unordered_map<EdgeMask, std::int64_t> terms_;
};

/// `f12*f13` (labels joined by `_` once either exceeds 9); `1` for the empty monomial.
std::string format_monomial(EdgeMask monomial, int order);
/// `f12*f13 + 2*f12*f13*f23`, monomials in sorted() order; `0` when empty.
std::string to_string(const FormalPolynomial& p);

inline constexpr int kMaxBoltzmannExpansion = 24;

/// prod_{X_f} f * prod_{X_ft} (1 + f), expanded.
FormalPolynomial expand_term(const MarkedGraph& g);
/// sum_k c_k expand_term(G_k); the prefactor is not applied and every
/// coefficient must be an integer.
FormalPolynomial expand_blc(const BasicLinearCombination& blc);

struct IdentityResult {
  bool equal = false;
  /// First differing monomial in sorted() order, with both coefficients.
  std::optional<EdgeMask> witness;
  std::int64_t lhs_coefficient = 0;
  std::int64_t rhs_coefficient = 0;
};

IdentityResult verify_identity(const FormalPolynomial& lhs, const FormalPolynomial& rhs);

inline constexpr int kMaxIdentityOrder = 6;

struct IdentityReport {
  std::string identity;
  int order = 0;
  bool holds = false;
  IdentityResult result;  // first failing comparison, or the last one run
  std::vector<std::string> notes;
};

/// All labeled tree terms vs the connected-graph sum.
IdentityReport check_tree_identity(int n);
/// Labeled Ree-Hoover expansion vs the block sum.
IdentityReport check_ree_hoover_identity(int n);
/// (i) all labeled trees vs the connected sum; (ii) the class-reduced sum
/// vs all labeled trees, compared per isomorphism class both for the
/// marked tree graphs and for every generated monomial graph.
IdentityReport partition_identity_check(int n);

}  // namespace mayer
