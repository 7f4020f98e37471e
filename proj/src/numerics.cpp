#include "mayer/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace mayer {

PotentialKind parse_potential_kind(const std::string& name) {
  if (name == "hard-rod") return PotentialKind::hard_rod;
  if (name == "hard-sphere") return PotentialKind::hard_sphere;
  if (name == "square-well") return PotentialKind::square_well;
  if (name == "lennard-jones") return PotentialKind::lennard_jones;
  throw ValidationError("unknown potential '" + name +
                        "' (hard-rod, hard-sphere, square-well, lennard-jones)");
}

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::hard_rod: return "hard-rod";
    case PotentialKind::hard_sphere: return "hard-sphere";
    case PotentialKind::square_well: return "square-well";
    case PotentialKind::lennard_jones: return "lennard-jones";
  }
  return "unknown";
}

void PotentialModel::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ValidationError(std::string(what) + " must be positive and finite");
  };
  positive(sigma, "sigma");
  positive(beta, "beta");
  if (nu < 1) throw ValidationError("dimension nu must be at least 1");
  if (kind == PotentialKind::hard_rod && nu != 1)
    throw ValidationError("hard rods live in one dimension (nu = 1)");
  if (kind == PotentialKind::square_well) {
    if (!(lambda > 1.0) || !std::isfinite(lambda))
      throw ValidationError("square-well range ratio lambda must exceed 1");
    if (!std::isfinite(epsilon)) throw ValidationError("epsilon must be finite");
  }
  if (kind == PotentialKind::lennard_jones) {
    positive(epsilon, "epsilon");
    // The r^-6 tail of |f| is integrable in nu dimensions only for nu < 6.
    if (nu > 5) throw ValidationError("Lennard-Jones sampling supports nu <= 5");
  }
}

double mayer_f(const PotentialModel& m, double r) {
  switch (m.kind) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere:
      return r < m.sigma ? -1.0 : 0.0;
    case PotentialKind::square_well:
      if (r < m.sigma) return -1.0;
      return r < m.lambda * m.sigma ? std::expm1(m.beta * m.epsilon) : 0.0;
    case PotentialKind::lennard_jones: {
      if (r <= 0.0) return -1.0;
      const double s6 = std::pow(m.sigma / r, 6);
      return std::expm1(-m.beta * 4.0 * m.epsilon * (s6 * s6 - s6));
    }
  }
  return 0.0;
}

double mayer_f(const PotentialModel& m, const Eigen::Ref<const Eigen::VectorXd>& d) {
  return mayer_f(m, d.norm());
}

namespace {

double ball_volume(int nu) {
  return std::pow(std::numbers::pi, nu / 2.0) / boost::math::tgamma(nu / 2.0 + 1.0);
}

double sphere_area(int nu) { return nu * ball_volume(nu); }

}  // namespace

DisplacementSampler::DisplacementSampler(const PotentialModel& model) : model_(model) {
  model_.validate();
  const PotentialModel& m = model_;
  const double core = ball_volume(m.nu) * std::pow(m.sigma, m.nu);
  switch (m.kind) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere:
      c_ = core;
      break;
    case PotentialKind::square_well: {
      const double shell = std::abs(std::expm1(m.beta * m.epsilon)) * core *
                           (std::pow(m.lambda, m.nu) - 1.0);
      c_ = core + shell;
      core_probability_ = core / c_;
      break;
    }
    case PotentialKind::lennard_jones: {
      const double be = m.beta * m.epsilon;
      r_join_ = std::pow(2.0, 1.0 / 6.0) * m.sigma;
      inner_height_ = std::max(1.0, std::expm1(be));
      outer_scale_ = 4.0 * be * std::exp(be);
      inner_mass_ = inner_height_ * std::pow(r_join_, m.nu) / m.nu;
      outer_mass_ = outer_scale_ * std::pow(m.sigma, 6) * std::pow(r_join_, m.nu - 6) / (6 - m.nu);

      auto radial = [&](double r) { return std::abs(mayer_f(m, r)) * std::pow(r, m.nu - 1); };
      using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
      const double cuts[] = {0.0, m.sigma, r_join_, 2 * m.sigma, 4 * m.sigma, 16 * m.sigma};
      double total = 0.0;
      for (std::size_t i = 0; i + 1 < std::size(cuts); ++i)
        total += GK::integrate(radial, cuts[i], cuts[i + 1], 15, 1e-13);
      total += GK::integrate(radial, cuts[std::size(cuts) - 1],
                             std::numeric_limits<double>::infinity(), 15, 1e-13);
      c_ = sphere_area(m.nu) * total;
      break;
    }
  }
  if (!(c_ > 0.0)) throw ValidationError("|f| integrates to zero for this model");
}

double DisplacementSampler::draw_radius(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const PotentialModel& m = model_;
  switch (m.kind) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere:
      return m.sigma * std::pow(u(rng), 1.0 / m.nu);
    case PotentialKind::square_well: {
      if (u(rng) < core_probability_) return m.sigma * std::pow(u(rng), 1.0 / m.nu);
      const double lo = std::pow(m.sigma, m.nu);
      const double hi = std::pow(m.lambda * m.sigma, m.nu);
      return std::pow(lo + u(rng) * (hi - lo), 1.0 / m.nu);
    }
    case PotentialKind::lennard_jones: {
      while (true) {
        double r;
        double envelope;
        if (u(rng) * (inner_mass_ + outer_mass_) < inner_mass_) {
          r = r_join_ * std::pow(u(rng), 1.0 / m.nu);
          envelope = inner_height_;
        } else {
          // Inverse of the r^(nu-7) tail on [r_join, infinity).
          r = r_join_ * std::pow(1.0 - u(rng), 1.0 / (m.nu - 6));
          envelope = outer_scale_ * std::pow(m.sigma / r, 6);
        }
        if (u(rng) * envelope < std::abs(mayer_f(m, r))) return r;
      }
    }
  }
  return 0.0;
}

void DisplacementSampler::draw(std::mt19937_64& rng, Eigen::Ref<Eigen::VectorXd> out) const {
  const double r = draw_radius(rng);
  if (model_.nu == 1) {
    out[0] = (rng() & 1) ? r : -r;
    return;
  }
  std::normal_distribution<double> normal;
  double norm = 0.0;
  while (norm == 0.0) {
    for (int i = 0; i < model_.nu; ++i) out[i] = normal(rng);
    norm = out.norm();
  }
  out *= r / norm;
}

std::vector<int> spanning_tree_parents(const MarkedGraph& g) {
  if (!g.is_basic()) throw ValidationError("spanning tree needs a connected Mayer subgraph");
  const int n = g.order();
  const auto adj = adjacency(n, g.mayer());
  std::vector<int> parent(n + 1, 0);
  std::uint32_t seen = 1u << 0;  // bit v-1 for vertex v
  std::uint32_t layer = seen;
  while (layer) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = layer; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest) + 1;
      for (std::uint32_t nb = adj[u] & ~seen & ~next; nb; nb &= nb - 1) {
        parent[std::countr_zero(nb) + 1] = u;  // layer scanned in label order: smallest wins
      }
      next |= adj[u] & ~seen;
    }
    seen |= next;
    layer = next;
  }
  return {parent.begin() + 2, parent.end()};
}

namespace {

struct BlockStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t evaluations = 0;
};

// Chan et al. pairwise combination, applied in block order.
void merge(BlockStats& into, const BlockStats& b) {
  if (b.count == 0) return;
  const std::int64_t total = into.count + b.count;
  const double delta = b.mean - into.mean;
  into.mean += delta * static_cast<double>(b.count) / static_cast<double>(total);
  into.m2 += b.m2 + delta * delta * static_cast<double>(into.count) *
                        static_cast<double>(b.count) / static_cast<double>(total);
  into.count = total;
  into.evaluations += b.evaluations;
}

struct SamplingPlan {
  int n;
  std::vector<int> order;   // vertices in breadth-first order, root excluded
  std::vector<int> parent;  // indexed by vertex
  std::vector<std::pair<int, int>> mayer_rest;
  std::vector<std::pair<int, int>> boltzmann;
};

SamplingPlan plan_for(const MarkedGraph& g) {
  SamplingPlan p;
  p.n = g.order();
  const auto parents = spanning_tree_parents(g);
  p.parent.assign(p.n + 1, 0);
  std::vector<int> depth(p.n + 1, 0);
  EdgeMask tree = 0;
  for (int v = 2; v <= p.n; ++v) {
    p.parent[v] = parents[v - 2];
    tree |= EdgeMask{1} << pair_index(v, p.parent[v]);
  }
  for (int v = 2; v <= p.n; ++v)
    for (int u = v; u != 1; u = p.parent[u]) ++depth[v];
  for (int v = 2; v <= p.n; ++v) p.order.push_back(v);
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });
  for (const auto& e : edges_of(g.mayer() & ~tree)) p.mayer_rest.emplace_back(e.u, e.v);
  for (const auto& e : edges_of(g.boltzmann())) p.boltzmann.emplace_back(e.u, e.v);
  return p;
}

BlockStats run_block(const SamplingPlan& plan, const DisplacementSampler& sampler,
                     std::int64_t count, std::mt19937_64& rng) {
  const PotentialModel& model = sampler.model();
  Eigen::MatrixXd pos = Eigen::MatrixXd::Zero(model.nu, plan.n + 1);
  Eigen::VectorXd d(model.nu);
  BlockStats s;
  for (std::int64_t k = 0; k < count; ++k) {
    double w = 1.0;
    for (int v : plan.order) {
      sampler.draw(rng, d);
      const double f = mayer_f(model, d);
      w *= (f > 0.0) - (f < 0.0);
      pos.col(v) = pos.col(plan.parent[v]) + d;
    }
    for (auto [a, b] : plan.mayer_rest) w *= mayer_f(model, (pos.col(a) - pos.col(b)).norm());
    for (auto [a, b] : plan.boltzmann) w *= 1.0 + mayer_f(model, (pos.col(a) - pos.col(b)).norm());
    s.evaluations += static_cast<std::int64_t>(plan.order.size() + plan.mayer_rest.size() +
                                               plan.boltzmann.size());
    ++s.count;
    const double delta = w - s.mean;
    s.mean += delta / static_cast<double>(s.count);
    s.m2 += delta * (w - s.mean);
  }
  return s;
}

void check_options(const EstimateOptions& o) {
  if (o.samples < 1) throw ValidationError("need at least one sample");
  if (o.workers < 1) throw ValidationError("need at least one worker");
  if (o.samples > kMaxTotalSamples)
    throw BudgetError("sample budget of " + std::to_string(kMaxTotalSamples) + " exceeded");
}

}  // namespace

EstimateReport estimate_graph_mc(const MarkedGraph& g, const PotentialModel& model,
                                 const EstimateOptions& options, std::uint64_t stream) {
  check_options(options);
  const DisplacementSampler sampler(model);
  const SamplingPlan plan = plan_for(g);
  const std::int64_t blocks = (options.samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<BlockStats> stats(blocks);

  auto work = [&](int worker) {
    for (std::int64_t b = worker; b < blocks; b += options.workers) {
      const std::int64_t count = std::min(kSampleBlock, options.samples - b * kSampleBlock);
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
      std::mt19937_64 rng(seq);
      stats[b] = run_block(plan, sampler, count, rng);
    }
  };
  const int workers = static_cast<int>(std::min<std::int64_t>(options.workers, blocks));
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  BlockStats all;
  for (const auto& s : stats) merge(all, s);
  const double scale = std::pow(sampler.normalization(), g.order() - 1);
  EstimateReport r;
  r.samples = all.count;
  r.normalization = sampler.normalization();
  r.evaluations = all.evaluations;
  r.value = scale * all.mean;
  r.std_error =
      all.count > 1 ? scale * std::sqrt(all.m2 / static_cast<double>(all.count - 1) /
                                        static_cast<double>(all.count))
                    : 0.0;
  r.terms.push_back(TermEstimate{1, r.value, r.std_error, g.edge_count()});
  return r;
}

EstimateReport estimate_tree_integral_mc(const RootedLabeledTree& t, const AdmissibleEdgeSet& ad,
                                         const PotentialModel& model, std::int64_t samples,
                                         std::uint64_t seed, int workers) {
  return estimate_graph_mc(marked_graph(t, ad), model, EstimateOptions{samples, seed, workers});
}

EstimateReport estimate_blc(const BasicLinearCombination& blc, const PotentialModel& model,
                            const EstimateOptions& options) {
  check_options(options);
  if (blc.length() > 0 &&
      static_cast<double>(options.samples) * static_cast<double>(blc.length()) >
          static_cast<double>(kMaxTotalSamples))
    throw BudgetError("sample budget exhausted: " + std::to_string(blc.length()) + " terms x " +
                      std::to_string(options.samples) + " samples");
  EstimateReport r;
  r.samples = options.samples;
  const double prefactor = blc.prefactor().convert_to<double>();
  double sum = 0.0;
  double var = 0.0;
  for (std::size_t k = 0; k < blc.length(); ++k) {
    const auto& term = blc.terms()[k];
    const auto est = estimate_graph_mc(term.graph, model, options, k);
    const double c = term.coefficient.convert_to<double>();
    sum += c * est.value;
    var += c * c * est.std_error * est.std_error;
    r.normalization = est.normalization;
    r.evaluations += est.evaluations;
    r.terms.push_back(TermEstimate{term.coefficient, est.value, est.std_error, term.graph.edge_count()});
  }
  r.value = prefactor * sum;
  r.std_error = std::abs(prefactor) * std::sqrt(var);
  return r;
}

namespace {

class PiecewiseQuadrature {
 public:
  PiecewiseQuadrature(const MarkedGraph& g, const PotentialModel& m, int points)
      : n_(g.order()), model_(m) {
    for (const auto& e : edges_of(g.mayer())) mayer_.emplace_back(e.u, e.v);
    for (const auto& e : edges_of(g.boltzmann())) boltzmann_.emplace_back(e.u, e.v);
    std::vector<double> jumps{m.sigma};
    if (m.kind == PotentialKind::square_well) jumps.push_back(m.lambda * m.sigma);
    reach_ = (n_ - 1) * jumps.back();
    // sums_[k]: every signed sum of at most k jump lengths.
    sums_.push_back({0.0});
    for (int k = 1; k < n_; ++k) {
      std::vector<double> next = sums_.back();
      for (double s : sums_.back())
        for (double j : jumps) {
          next.push_back(s + j);
          next.push_back(s - j);
        }
      sums_.push_back(unique_sorted(std::move(next)));
    }
    gauss_legendre(points);
  }

  double run() { return integrate(2); }

 private:
  static std::vector<double> unique_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
      if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
    return out;
  }

  void gauss_legendre(int points) {
    // Newton iteration on P_points for the nodes on [-1, 1].
    for (int i = 1; i <= points; ++i) {
      double x = std::cos(std::numbers::pi * (i - 0.25) / (points + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= points; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = points * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-16) break;
      }
      nodes_.push_back(x);
      weights_.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
  }

  double integrand() const {
    double w = 1.0;
    for (auto [a, b] : mayer_) w *= mayer_f(model_, std::abs(x_[a] - x_[b]));
    for (auto [a, b] : boltzmann_) w *= 1.0 + mayer_f(model_, std::abs(x_[a] - x_[b]));
    return w;
  }

  double integrate(int k) {
    if (k > n_) return integrand();
    // Partial integrals over x_{k+1..n} change form only where x_k sits a
    // signed sum of at most n-k+1 jump lengths away from a fixed vertex.
    std::vector<double> cuts{-reach_, reach_};
    for (int j = 1; j < k; ++j)
      for (double s : sums_[n_ - k + 1]) {
        const double c = x_[j] + s;
        if (c > -reach_ && c < reach_) cuts.push_back(c);
      }
    cuts = unique_sorted(std::move(cuts));
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      const double half = 0.5 * (cuts[i + 1] - cuts[i]);
      for (std::size_t q = 0; q < nodes_.size(); ++q) {
        x_[k] = mid + half * nodes_[q];
        total += half * weights_[q] * integrate(k + 1);
      }
    }
    return total;
  }

  int n_;
  const PotentialModel& model_;
  std::vector<std::pair<int, int>> mayer_;
  std::vector<std::pair<int, int>> boltzmann_;
  std::vector<std::vector<double>> sums_;
  double reach_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double x_[kMaxOrder + 1] = {};
};

}  // namespace

double quadrature_1d_reference(const MarkedGraph& g, const PotentialModel& model, double tol) {
  model.validate();
  if (model.nu != 1) throw BudgetError("reference quadrature supports nu = 1 only");
  if (model.kind != PotentialKind::hard_rod && model.kind != PotentialKind::square_well &&
      model.kind != PotentialKind::hard_sphere)
    throw BudgetError("reference quadrature supports hard-core and square-well potentials only");
  if (g.order() > 4) throw BudgetError("reference quadrature supports n <= 4");
  if (!g.is_basic()) throw ValidationError("reference quadrature needs a basic graph");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  // Between cuts every partial integral is a polynomial of degree <= n-2,
  // so three nodes are already exact; four serve as the refinement check.
  const double coarse = PiecewiseQuadrature(g, model, 3).run();
  const double fine = PiecewiseQuadrature(g, model, 4).run();
  if (std::abs(coarse - fine) > tol)
    throw std::runtime_error("reference quadrature did not reach the requested tolerance");
  return fine;
}

}  // namespace mayer
