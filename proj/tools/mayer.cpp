// Command-line front end: counts, criteria, tables, verify, transform,
// estimate and ingest-frame.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mayer/blc.hpp"
#include "mayer/criteria.hpp"
#include "mayer/numerics.hpp"
#include "mayer/symbolic.hpp"
#include "mayer/tables.hpp"
#include "mayer/transforms.hpp"
#include "mayer/trees.hpp"

using nlohmann::json;
using namespace mayer;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- counts

struct CountsArgs {
  int n_min = 2;
  int n_max = 10;
  int enumerate_max = 7;
  std::string format = "csv";
  std::string output;
};

int run_counts(const CountsArgs& a) {
  if (a.n_min < 2 || a.n_max < a.n_min) throw ValidationError("need 2 <= n-min <= n-max");
  if (a.enumerate_max > kMaxClassEnumeration)
    throw BudgetError("enumeration is limited to n <= " + std::to_string(kMaxClassEnumeration));
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,count_tr,count_tr0,enumerated_tr,enumerated_tr0\n";
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const Integer tr = count_tr(n);
    const Integer tr0 = count_tr0(n);
    json row{{"n", n}, {"count_tr", tr.str()}, {"count_tr0", tr0.str()},
             {"enumerated_tr", nullptr}, {"enumerated_tr0", nullptr}};
    csv << n << "," << tr << "," << tr0 << ",";
    if (n <= a.enumerate_max) {
      const auto classes = enumerate_tr(n);
      std::int64_t in0 = 0;
      for (const auto& c : classes) in0 += in_t_n0(c.tree);
      row["enumerated_tr"] = classes.size();
      row["enumerated_tr0"] = in0;
      csv << classes.size() << "," << in0;
    } else {
      csv << ",";
    }
    csv << "\n";
    rows.push_back(row);
  }
  if (a.format == "json")
    emit(dump(rows), a.output);
  else
    emit(csv.str(), a.output);
  return kExitOk;
}

// ------------------------------------------------------ representations

const std::vector<std::string> kRepresentations = {"tree-b", "tree-a", "tree-all", "mayer",
                                                   "blocks", "rh",     "frame-file"};

BasicLinearCombination load_frame_file(const std::string& path) {
  return load_frame_sum(parse_frame_sum(read_file(path)));
}

BasicLinearCombination build_rep(const std::string& rep, std::optional<int> n,
                                 const std::string& frame_file) {
  if (rep == "frame-file") {
    if (frame_file.empty()) throw ValidationError("--rep frame-file needs --frame-file");
    auto blc = load_frame_file(frame_file);
    if (n && *n != blc.order())
      throw ValidationError("--n " + std::to_string(*n) + " disagrees with the frame file's order " +
                            std::to_string(blc.order()));
    return blc;
  }
  if (!n) throw ValidationError("--n is required for --rep " + rep);
  if (rep == "tree-b") return tree_sum_bn_blc(*n);
  if (rep == "tree-a") return tree_sum_an_blc(*n);
  if (rep == "tree-all") return tree_sum_all_blc(*n);
  if (rep == "mayer") return mayer_bn_blc(*n);
  if (rep == "blocks") return virial_block_blc(*n);
  if (rep == "rh") return ree_hoover_blc(*n);
  throw ValidationError("unknown representation '" + rep + "'");
}

json report_json(const BasicLinearCombination& blc) {
  const auto r = complexity_report(blc);
  return {{"provenance", blc.provenance()},
          {"order", r.order},
          {"prefactor", to_string(blc.prefactor())},
          {"cr1", r.cr1},
          {"cr2", r.cr2},
          {"cr3", r.cr3},
          {"complete", r.complete},
          {"edge_identity_holds", r.edge_identity_holds()},
          {"n1", r.n1}};
}

// -------------------------------------------------------------- criteria

struct CriteriaArgs {
  std::string rep;
  std::optional<int> n;
  int criterion = 1;
  std::string frame_file;
  std::string compare_rep;
  std::string blc_output;
  std::string output;
};

int run_criteria(const CriteriaArgs& a) {
  const auto blc = build_rep(a.rep, a.n, a.frame_file);
  json out = report_json(blc);
  out["representation"] = a.rep;
  out["criterion"] = a.criterion;
  out["value"] = criterion_value(complexity_report(blc), a.criterion);
  if (!a.compare_rep.empty()) {
    const auto other = build_rep(a.compare_rep, blc.order(), a.frame_file);
    const auto v = compare(criterion_value(complexity_report(other), a.criterion),
                           out["value"].get<std::int64_t>(), a.criterion);
    out["comparison"] = {{"subject", a.compare_rep},
                         {"reference", a.rep},
                         {"subject_score", v.subject_score},
                         {"reference_score", v.reference_score},
                         {"verdict", to_string(v.kind)}};
  }
  if (!a.blc_output.empty()) emit(blc_to_json(blc, 2) + "\n", a.blc_output);
  emit(dump(out), a.output);
  return kExitOk;
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::vector<int> tables;
  std::string format = "md";
  std::vector<std::string> frame_files;
  std::string output;
};

int run_tables(const TablesArgs& a) {
  FrameSums frames;
  for (const auto& path : a.frame_files) {
    auto blc = load_frame_file(path);
    const int n = blc.order();
    if (!frames.emplace(n, std::move(blc)).second)
      throw ValidationError("two frame files for order " + std::to_string(n));
  }
  std::vector<int> which = a.tables;
  if (which.empty()) which = {1, 2, 3, 4, 5, 6};
  std::string text;
  json all = json::array();
  for (std::size_t i = 0; i < which.size(); ++i) {
    const auto table = build_table(which[i], frames);
    if (a.format == "md") {
      if (i) text += "\n";
      text += render_markdown(table);
    } else if (a.format == "csv") {
      std::string csv = render_csv(table);
      if (i) csv.erase(0, csv.find('\n') + 1);  // one header for the whole file
      text += csv;
    } else {
      all.push_back(table_to_json(table));
    }
  }
  if (a.format == "json") text = dump(which.size() == 1 ? all[0] : all);
  emit(text, a.output);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity;
  int n = 0;
  std::string output;
};

int run_verify(const VerifyArgs& a) {
  IdentityReport r;
  if (a.identity == "tree")
    r = check_tree_identity(a.n);
  else if (a.identity == "rh")
    r = check_ree_hoover_identity(a.n);
  else
    r = partition_identity_check(a.n);
  json out{{"identity", r.identity}, {"n", r.order}, {"holds", r.holds}, {"notes", r.notes}};
  if (!r.holds && r.result.witness)
    out["witness"] = {{"monomial", format_monomial(*r.result.witness, r.order)},
                      {"lhs_coefficient", r.result.lhs_coefficient},
                      {"rhs_coefficient", r.result.rhs_coefficient}};
  emit(dump(out), a.output);
  return r.holds ? kExitOk : kExitFailed;
}

// ------------------------------------------------------------- transform

struct TransformArgs {
  std::string route;
  std::string input;
  std::string values;
  std::optional<int> n;
  std::string output;
};

std::vector<Rational> parse_coefficients(const TransformArgs& a) {
  if (a.input.empty() == a.values.empty())
    throw ValidationError("give exactly one of --input and --values");
  std::vector<Rational> out;
  if (!a.values.empty()) {
    std::stringstream ss(a.values);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
    return out;
  }
  json j;
  try {
    j = json::parse(read_file(a.input));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("coefficient file is not valid JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("coefficients")) throw ValidationError("JSON object needs a 'coefficients' array");
    j = j["coefficients"];
  }
  if (!j.is_array()) throw ValidationError("coefficients must be a JSON array");
  for (const auto& v : j) {
    if (v.is_string())
      out.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer())
      out.push_back(Rational(v.get<std::int64_t>()));
    else
      throw ValidationError("coefficients are integers or \"num/den\" strings");
  }
  return out;
}

json ops_json(const OpCounter& ops, std::int64_t bound) {
  return {{"ops_counted", ops.total()},
          {"ops_strict", ops.strict_total()},
          {"paper_bound", bound},
          {"within_bound", ops.total() <= bound}};
}

int run_transform(const TransformArgs& a) {
  const auto c = parse_coefficients(a);
  const int n = a.n.value_or(static_cast<int>(c.size()));
  if (n < 1 || n > static_cast<int>(c.size()))
    throw ValidationError("--n must be between 1 and the number of coefficients");
  const std::span<const Rational> in(c);
  json out{{"route", a.route}, {"n", n}, {"input", json::array()}};
  for (int k = 0; k < n; ++k) out["input"].push_back(to_string(c[k]));

  json results = json::array();
  if (a.route == "b-to-a" || a.route == "a-to-b") {
    const auto v = a.route == "b-to-a" ? a_from_b<Rational>(in, n) : b_from_a<Rational>(in, n);
    for (int k = 0; k < n; ++k) results.push_back({{"order", k + 1}, {"value", to_string(v[k])}});
  } else if (a.route == "mayer") {
    for (int k = 2; k <= n; ++k) {
      OpCounter ops;
      const Rational v = virial_from_b<Rational>(in, k, ops);
      json r = ops_json(ops, bound_mayer(k));
      r["order"] = k;
      r["value"] = to_string(v);
      results.push_back(r);
    }
  } else {
    for (int k = 2; k <= n; ++k) {
      const auto p = virial_from_a<Rational>(in, k);
      json r = ops_json(p.total(), bound_pipeline(k));
      r["order"] = k;
      r["value"] = to_string(p.value);
      r["e_ops"] = p.e_ops.total();
      r["tau_ops"] = p.tau_ops.total();
      r["combine_ops"] = p.combine_ops.total();
      results.push_back(r);
    }
  }
  out["results"] = results;
  emit(dump(out), a.output);
  return kExitOk;
}

// -------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string config;
  std::string rep = "blocks";
  std::optional<int> n;
  std::string frame_file;
  std::string potential = "hard-rod";
  double sigma = 1.0;
  double epsilon = 1.0;
  double lambda = 1.5;
  double beta = 1.0;
  int nu = 1;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string output;
};

// Fills every field the command line left unset from the JSON config.
void apply_config(EstimateArgs& a, const CLI::App& cmd) {
  if (a.config.empty()) return;
  json j;
  try {
    j = json::parse(read_file(a.config));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  auto unset = [&](const std::string& name) { return cmd.get_option("--" + name)->count() == 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (!cmd.get_option_no_throw("--" + key) || key == "config")
        throw ValidationError("unknown config key '" + key + "'");
      if (!unset(key)) continue;
      if (key == "rep") a.rep = value.get<std::string>();
      else if (key == "n") a.n = value.get<int>();
      else if (key == "frame-file") a.frame_file = value.get<std::string>();
      else if (key == "potential") a.potential = value.get<std::string>();
      else if (key == "sigma") a.sigma = value.get<double>();
      else if (key == "epsilon") a.epsilon = value.get<double>();
      else if (key == "lambda") a.lambda = value.get<double>();
      else if (key == "beta") a.beta = value.get<double>();
      else if (key == "nu") a.nu = value.get<int>();
      else if (key == "samples") a.samples = value.get<std::int64_t>();
      else if (key == "seed") a.seed = value.get<std::uint64_t>();
      else if (key == "workers") a.workers = value.get<int>();
      else if (key == "output") a.output = value.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config value has the wrong type: ") + e.what());
  }
}

int run_estimate(EstimateArgs& a, const CLI::App& cmd) {
  apply_config(a, cmd);
  if (std::find(kRepresentations.begin(), kRepresentations.end(), a.rep) == kRepresentations.end())
    throw ValidationError("unknown representation '" + a.rep + "'");
  PotentialModel model;
  model.kind = parse_potential_kind(a.potential);
  model.sigma = a.sigma;
  model.epsilon = a.epsilon;
  model.lambda = a.lambda;
  model.beta = a.beta;
  model.nu = a.nu;
  model.validate();
  const auto blc = build_rep(a.rep, a.n, a.frame_file);
  const auto r = estimate_blc(blc, model, EstimateOptions{a.samples, a.seed, a.workers});

  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"coefficient", to_string(t.coefficient)},
                     {"value", t.value},
                     {"std_error", t.std_error},
                     {"evaluations_per_sample", t.evaluations_per_sample}});
  json out{{"representation", a.rep},
           {"n", blc.order()},
           {"prefactor", to_string(blc.prefactor())},
           {"potential",
            {{"kind", to_string(model.kind)},
             {"sigma", model.sigma},
             {"epsilon", model.epsilon},
             {"lambda", model.lambda},
             {"beta", model.beta},
             {"nu", model.nu}}},
           {"seed", a.seed},
           {"workers", a.workers},
           {"value", r.value},
           {"std_error", r.std_error},
           {"samples", r.samples},
           {"normalization", r.normalization},
           {"evaluations", r.evaluations},
           {"terms", terms}};
  emit(dump(out), a.output);
  return kExitOk;
}

// --------------------------------------------------------- ingest-frame

struct IngestArgs {
  std::string file;
  std::string blc_output;
  std::string output;
};

int run_ingest(const IngestArgs& a) {
  const auto record = parse_frame_sum(read_file(a.file));
  const auto blc = load_frame_sum(record);
  json out = report_json(blc);
  out["ensembles"] = record.ensembles.size();
  if (!a.blc_output.empty()) emit(blc_to_json(blc, 2) + "\n", a.blc_output);
  emit(dump(out), a.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-expansion representation workbench"};
  app.require_subcommand(1);

  CountsArgs counts;
  auto* c = app.add_subcommand("counts", "Tree-sum term counts by formula and by enumeration");
  c->add_option("--n-min", counts.n_min, "Smallest order")->capture_default_str();
  c->add_option("--n-max", counts.n_max, "Largest order")->capture_default_str();
  c->add_option("--enumerate-max", counts.enumerate_max, "Enumerate classes up to this order")
      ->capture_default_str();
  c->add_option("--format", counts.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  c->add_option("-o,--output", counts.output, "Output path (default stdout)");

  CriteriaArgs criteria;
  auto* cr = app.add_subcommand("criteria", "Complexity report of one representation");
  cr->add_option("--rep", criteria.rep, "Representation")->required()->check(CLI::IsMember(kRepresentations));
  cr->add_option("--n", criteria.n, "Order");
  cr->add_option("--criterion", criteria.criterion, "1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
  cr->add_option("--frame-file", criteria.frame_file, "Frame-sum records for --rep frame-file");
  cr->add_option("--compare", criteria.compare_rep, "Compare another representation against --rep")
      ->check(CLI::IsMember(kRepresentations));
  cr->add_option("--blc-output", criteria.blc_output, "Also write the combination as JSON");
  cr->add_option("-o,--output", criteria.output, "Output path (default stdout)");

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "Complexity tables: reference, recomputed, flags");
  t->add_option("--table", tables.tables, "Table index 1..6 (repeatable; default all)")
      ->check(CLI::Range(1, 6));
  t->add_option("--format", tables.format)->check(CLI::IsMember({"md", "csv", "json"}))->capture_default_str();
  t->add_option("--frame-file", tables.frame_files, "Frame-sum records used for the L_F rows");
  t->add_option("-o,--output", tables.output, "Output path (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Symbolic identity check");
  v->add_option("--identity", verify.identity)->required()->check(CLI::IsMember({"tree", "rh", "partition"}));
  v->add_option("--n", verify.n)->required();
  v->add_option("-o,--output", verify.output, "Output path (default stdout)");

  TransformArgs transform;
  auto* tr = app.add_subcommand("transform", "Exact series transforms with operation counts");
  tr->add_option("--route", transform.route)
      ->required()
      ->check(CLI::IsMember({"mayer", "pipeline", "b-to-a", "a-to-b"}));
  tr->add_option("--input", transform.input, "JSON coefficient vector, first entry order 1 ('-' = stdin)");
  tr->add_option("--values", transform.values, "Comma-separated coefficients, e.g. 1,-1,3/2");
  tr->add_option("--n", transform.n, "Highest order (default: all given)");
  tr->add_option("-o,--output", transform.output, "Output path (default stdout)");

  EstimateArgs estimate;
  auto* e = app.add_subcommand("estimate", "Monte Carlo estimate of a representation");
  e->add_option("--config", estimate.config, "JSON file supplying any of these options");
  e->add_option("--rep", estimate.rep)->capture_default_str();
  e->add_option("--n", estimate.n);
  e->add_option("--frame-file", estimate.frame_file);
  e->add_option("--potential", estimate.potential, "hard-rod, hard-sphere, square-well, lennard-jones")
      ->capture_default_str();
  e->add_option("--sigma", estimate.sigma)->capture_default_str();
  e->add_option("--epsilon", estimate.epsilon)->capture_default_str();
  e->add_option("--lambda", estimate.lambda, "Square-well range in units of sigma")->capture_default_str();
  e->add_option("--beta", estimate.beta)->capture_default_str();
  e->add_option("--nu", estimate.nu, "Dimension")->capture_default_str();
  e->add_option("--samples", estimate.samples, "Samples per term")->capture_default_str();
  e->add_option("--seed", estimate.seed)->capture_default_str();
  e->add_option("--workers", estimate.workers)->capture_default_str();
  e->add_option("-o,--output", estimate.output, "Output path (default stdout)");

  IngestArgs ingest;
  auto* in = app.add_subcommand("ingest-frame", "Load frame-sum records and report their complexity");
  in->add_option("--file", ingest.file, "Record file ('-' = stdin)")->required();
  in->add_option("--blc-output", ingest.blc_output, "Also write the combination as JSON");
  in->add_option("-o,--output", ingest.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*c) return run_counts(counts);
    if (*cr) return run_criteria(criteria);
    if (*t) return run_tables(tables);
    if (*v) return run_verify(verify);
    if (*tr) return run_transform(transform);
    if (*e) return run_estimate(estimate, *e);
    if (*in) return run_ingest(ingest);
  } catch (const BudgetError& err) {
    std::cerr << "budget: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitUsage;
  } catch (const IoError& err) {
    std::cerr << "i/o: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
