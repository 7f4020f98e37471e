#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mayer/blc.hpp"
#include "mayer/graph.hpp"
#include "mayer/trees.hpp"

namespace mayer {

enum class PotentialKind { hard_rod, hard_sphere, square_well, lennard_jones };

PotentialKind parse_potential_kind(const std::string& name);
std::string to_string(PotentialKind kind);

/// Pair potential at inverse temperature beta in nu dimensions.
/// Square well: infinite core below sigma, depth epsilon out to lambda*sigma.
struct PotentialModel {
  PotentialKind kind = PotentialKind::hard_rod;
  double sigma = 1.0;
  double epsilon = 1.0;
  double lambda = 1.5;
  int nu = 1;
  double beta = 1.0;

  /// Throws ValidationError for inconsistent parameters (hard rods need
  /// nu = 1, Lennard-Jones needs nu <= 5, ...).
  void validate() const;
};

/// f(r) = exp(-beta Phi(r)) - 1 at separation r >= 0; exactly -1 inside a hard core.
double mayer_f(const PotentialModel& model, double r);
double mayer_f(const PotentialModel& model, const Eigen::Ref<const Eigen::VectorXd>& displacement);

/// Draws displacements with density |f| / C.
class DisplacementSampler {
 public:
  explicit DisplacementSampler(const PotentialModel& model);

  /// C = integral of |f| over R^nu.
  double normalization() const { return c_; }
  const PotentialModel& model() const { return model_; }
  void draw(std::mt19937_64& rng, Eigen::Ref<Eigen::VectorXd> out) const;

 private:
  double draw_radius(std::mt19937_64& rng) const;

  PotentialModel model_;
  double c_ = 0.0;
  double core_probability_ = 1.0;  // square well: core versus shell
  double r_join_ = 0.0;            // Lennard-Jones envelope pieces meet here
  double inner_height_ = 0.0;      // envelope on [0, r_join)
  double outer_scale_ = 0.0;       // envelope B (sigma/r)^6 beyond
  double inner_mass_ = 0.0;
  double outer_mass_ = 0.0;
};

struct TermEstimate {
  Rational coefficient;
  double value = 0.0;      // estimate of the bare integral I(G)
  double std_error = 0.0;
  int evaluations_per_sample = 0;
};

struct EstimateReport {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;        // per term
  double normalization = 0.0;      // C
  std::int64_t evaluations = 0;    // Mayer/Boltzmann evaluations performed, all terms
  std::vector<TermEstimate> terms;
};

struct EstimateOptions {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
};

inline constexpr std::int64_t kSampleBlock = 1 << 16;
inline constexpr std::int64_t kMaxTotalSamples = 20'000'000'000;

/// Breadth-first spanning tree of the Mayer subgraph: each vertex hangs
/// from its smallest-labeled neighbour in the previous layer. parents[k]
/// is the parent of vertex k+2.
std::vector<int> spanning_tree_parents(const MarkedGraph& g);

/// Monte Carlo estimate of the bare integral of one basic graph: one
/// displacement per spanning-tree edge drawn from |f|/C, weight = product of
/// the tree-edge signs, the remaining f and every Boltzmann factor.
/// Sample blocks are seeded from (seed, stream, block), so results do not
/// depend on the worker count.
EstimateReport estimate_graph_mc(const MarkedGraph& g, const PotentialModel& model,
                                 const EstimateOptions& options, std::uint64_t stream = 0);

EstimateReport estimate_tree_integral_mc(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad,
                                         const PotentialModel& model, std::int64_t samples,
                                         std::uint64_t seed, int workers = 1);

/// prefactor * sum_k c_k I(G_k), each term on its own stream; errors
/// combined in quadrature.
EstimateReport estimate_blc(const BasicLinearCombination& blc, const PotentialModel& model,
                            const EstimateOptions& options);

/// Deterministic reference for nu = 1, n <= 4, hard rods or square wells:
/// nested Gauss-Legendre between every point where the integrand or one
/// of its partial integrals can change form. The integrand is piecewise
/// constant, so the rule is exact up to rounding; `tol` is the accuracy
/// the caller needs and is checked against a refinement.
double quadrature_1d_reference(const MarkedGraph& g, const PotentialModel& model,
                               double tol = 1e-9);

}  // namespace mayer
