#include "vinberg_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/hitchin.hpp"
#include "vinberg/invariants.hpp"
#include "vinberg/toledo.hpp"

namespace vinberg::cli {

namespace {

const std::vector<std::string> commands = {"grade",       "invariants",   "rank",
                                           "quasisplit",  "toledo",       "window",
                                           "hitchin-base", "point-hitchin", "verify"};

// Values come from the command line first, then from the --in document.
class Inputs {
 public:
  explicit Inputs(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg.in) return;
    std::ifstream f(*cfg.in);
    if (!f) throw ValidationError("field 'in': cannot open " + *cfg.in);
    try {
      doc_ = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("field 'in': malformed JSON: ") + e.what());
    }
    if (!doc_.is_object()) throw ValidationError("field 'in': top level must be an object");
  }

  const Json& doc() const { return doc_; }
  bool has(const std::string& key) const { return doc_.contains(key); }

  template <class T>
  std::optional<std::vector<T>> list(const std::optional<std::vector<T>>& flag,
                                     const std::string& key) const {
    if (flag) return flag;
    if (!has(key)) return std::nullopt;
    const Json& j = doc_[key];
    if (!j.is_array()) throw ValidationError("field '" + key + "': expected an array of integers");
    std::vector<T> out;
    for (const auto& v : j) {
      if (!v.is_number_integer())
        throw ValidationError("field '" + key + "': expected an array of integers");
      out.push_back(v.get<T>());
    }
    return out;
  }

  std::optional<int> integer(const std::optional<int>& flag, const std::string& key) const {
    if (flag) return flag;
    if (!has(key)) return std::nullopt;
    if (!doc_[key].is_number_integer()) throw ValidationError("field '" + key + "': expected an integer");
    return doc_[key].get<int>();
  }

  std::optional<std::string> string(const std::optional<std::string>& flag,
                                    const std::string& key) const {
    if (flag) return flag;
    if (!has(key)) return std::nullopt;
    if (!doc_[key].is_string()) throw ValidationError("field '" + key + "': expected a string");
    return doc_[key].get<std::string>();
  }

  GradedDims dims() const {
    const auto d = list<int>(cfg_.dims, "dims");
    if (!d) throw ValidationError("field 'dims': required");
    const auto m = integer(cfg_.m, "m");
    if (m && *m != static_cast<int>(d->size()))
      throw ValidationError("field 'm': must equal the number of dims entries");
    GradedDims out(*d);
    out.validate();
    return out;
  }

  int genus() const {
    const auto g = integer(cfg_.genus, "genus");
    if (!g) throw ValidationError("field 'genus': required");
    return *g;
  }

  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  Json doc_ = Json::object();
};

template <class T>
Json scalars(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json quiver_json(const QuiverPoint& phi) {
  Json out = Json::array();
  for (const auto& f : phi.maps) out.push_back(to_json(f));
  return out;
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

bool collapse_consistent(const GradedDims& d) {
  const auto a = zgrading_to_cyclic(build_chain_zgrading(d));
  const auto b = build_cyclic_quiver_grading(d);
  for (int i = 0; i < d.m; ++i) {
    std::vector<SparseVector> x, y;
    for (const auto& v : a.component(i)) x.push_back(sparse_of(v));
    for (const auto& v : b.component(i)) y.push_back(sparse_of(v));
    if (!same_span(x, y, d.n() * d.n())) return false;
  }
  return true;
}

RunResult cmd_grade(const Inputs& in) {
  const GradedDims d = in.dims();
  const auto gr = build_cyclic_quiver_grading(d);
  const auto rep = verify_grading(gr);
  Json j = header("grade");
  j["dims"] = d.dims;
  j["m"] = d.m;
  j["n"] = d.n();
  j["component_dims"] = gr.component_dims();
  std::vector<std::size_t> expected;
  for (int i = 0; i < d.m; ++i) {
    std::size_t s = 0;
    for (int a = 0; a < d.m; ++a) s += static_cast<std::size_t>(d.dims[a] * d.dims[(a + i) % d.m]);
    expected.push_back(i == 0 ? s - 1 : s);
  }
  j["expected_dims"] = expected;
  j["total_dim"] = rep.total_dim;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < rep.checked.size(); ++a)
    for (std::size_t b = a; b < rep.checked.size(); ++b) pairs += rep.checked[a][b];
  j["bracket_pairs_checked"] = pairs;
  Json failures = Json::array();
  for (std::size_t t = 0; t < std::min<std::size_t>(rep.failures.size(), 5); ++t) {
    const auto& f = rep.failures[t];
    failures.push_back({{"i", f.i}, {"j", f.j}, {"first", f.first}, {"second", f.second}});
  }
  j["failures"] = failures;
  bool ok = rep.passed && gr.component_dims() == expected;
  if (d.m >= 2 && d.full_support()) {
    const bool c = collapse_consistent(d);
    j["z_collapse_consistent"] = c;
    ok = ok && c;
  } else {
    j["z_collapse_consistent"] = nullptr;
  }
  j["passed"] = ok;
  return {ok ? exit_ok : exit_certification, j, ok ? "" : "grading verification failed"};
}

RunResult cmd_invariants(const Inputs& in) {
  const GradedDims d = in.dims();
  const auto gr = build_cyclic_quiver_grading(d);
  const auto sys = build_invariant_system(gr, in.cfg().seed);
  Json j = header("invariants");
  j["dims"] = d.dims;
  j["m"] = d.m;
  j["k"] = sys.k;
  j["degrees"] = sys.degrees;
  j["jacobian_rank"] = sys.jacobian_rank;
  bool ok = sys.jacobian_rank == sys.k;
  Sampler rng(in.cfg().seed);
  const bool inv = check_g0_invariance(sys, random_quiver_point(d, rng), 10, in.cfg().seed);
  j["g0_invariance"] = inv;
  ok = ok && inv;
  if (sys.k > 0) {
    const auto rep = restriction_certificate(sys, cartan_candidate(gr));
    j["restriction"] = {{"passed", rep.passed},
                        {"grid_points", rep.grid_points},
                        {"weyl_order_predicted", rep.weyl_order_predicted},
                        {"weyl_order_closed_form", rep.weyl_order_closed_form}};
    ok = ok && rep.passed;
  } else {
    j["restriction"] = nullptr;
  }
  j["passed"] = ok;
  return {ok ? exit_ok : exit_certification, j, ok ? "" : "invariant certification failed"};
}

RunResult cmd_rank(const Inputs& in) {
  const GradedDims d = in.dims();
  const auto rep = certify_rank(build_cyclic_quiver_grading(d), in.cfg().seed);
  Json j = header("rank");
  j["dims"] = d.dims;
  j["m"] = d.m;
  j["rank"] = rep.rank;
  j["centralizer_dim_cartan"] = rep.centralizer_dim_cartan;
  j["centralizer_dim_point"] = rep.centralizer_dim_point;
  j["g1_centralizer_dim"] = rep.g1_centralizer_dim;
  j["orbit_codimension"] = rep.orbit_codimension;
  j["invariant_jacobian_rank"] = rep.invariant_jacobian_rank;
  return {exit_ok, j, ""};
}

RunResult cmd_quasisplit(const Inputs& in) {
  const GradedDims d = in.dims();
  const auto rep = quasi_split_classify(build_cyclic_quiver_grading(d));
  Json j = header("quasisplit");
  j["dims"] = d.dims;
  j["m"] = d.m;
  j["quasi_split"] = to_string(rep.classification);
  j["centralizer_dim"] = rep.centralizer_dim;
  j["abelian"] = rep.abelian;
  j["dimension_rule"] = to_string(rep.dimension_rule);
  const bool ok = rep.classification == rep.dimension_rule;
  return {ok ? exit_ok : exit_certification, j, ok ? "" : "classification disagrees with the dimension rule"};
}

HiggsType higgs_type(const Inputs& in) {
  HiggsType t;
  const auto ranks = in.list<int>(in.cfg().ranks, "ranks");
  if (!ranks) throw ValidationError("field 'ranks': required");
  t.ranks = *ranks;
  t.m = in.integer(in.cfg().m, "m").value_or(static_cast<int>(ranks->size()));
  const auto degrees = in.list<long>(in.cfg().degrees, "degrees");
  if (!degrees) throw ValidationError("field 'degrees': required");
  t.degrees = *degrees;
  t.genus = in.genus();
  if (t.m < 2 || ranks->size() != static_cast<std::size_t>(t.m)) t.validate();
  for (int r : t.ranks)
    if (r < 1) t.validate();
  int plus_max = 0;
  for (std::size_t i = 0; i + 1 < t.ranks.size(); ++i)
    plus_max = std::max(plus_max, std::min(t.ranks[i], t.ranks[i + 1]));
  t.phi_plus_rank = in.integer(in.cfg().phi_plus_rank, "phi_plus_rank").value_or(plus_max);
  t.phi_minus_rank = in.integer(in.cfg().phi_minus_rank, "phi_minus_rank")
                         .value_or(std::min(t.ranks.front(), t.ranks.back()));
  t.validate();
  return t;
}

RunResult cmd_toledo(const Inputs& in) {
  const HiggsType t = higgs_type(in);
  const ZGrading z = hodge_zgrading(GradedDims(t.ranks));
  const ToledoCharacter chi = toledo_character(z);
  const AmReport rep = am_check(t, chi, z);
  Json j = header("toledo");
  j["m"] = t.m;
  j["ranks"] = t.ranks;
  j["degrees"] = t.degrees;
  j["genus"] = t.genus;
  j["phi_plus_rank"] = t.phi_plus_rank;
  j["phi_minus_rank"] = t.phi_minus_rank;
  j["coefficients"] = scalars(chi.coefficients);
  j["q"] = to_json(chi.exponent_multiple());
  j["tau"] = to_json(rep.tau_plus);
  j["tau_plus_bound"] = to_json(rep.tau_plus_bound);
  j["rank_plus"] = to_json(rep.rank_plus);
  j["tau_minus"] = to_json(rep.tau_minus);
  j["tau_minus_bound"] = to_json(rep.tau_minus_bound);
  j["rank_minus"] = to_json(rep.rank_minus);
  if (rep.window)
    j["window"] = {to_json(rep.window->first), to_json(rep.window->second)};
  else
    j["window"] = nullptr;
  j["classical_bound"] = rep.classical_bound ? to_json(*rep.classical_bound) : Json(nullptr);
  j["plus_satisfied"] = rep.plus_satisfied;
  j["minus_satisfied"] = rep.minus_satisfied;
  j["satisfied"] = rep.satisfied;
  j["at_plus_boundary"] = rep.at_plus_boundary;
  j["at_boundary"] = rep.at_boundary;
  j["maximal"] = rep.maximal;
  j["cayley"] = rep.cayley;
  j["guaranteed"] = rep.minus_guaranteed;
  return {exit_ok, j, ""};
}

RunResult cmd_window(const Inputs& in) {
  const auto ranks = in.list<int>(in.cfg().ranks, "ranks");
  if (!ranks) throw ValidationError("field 'ranks': required");
  const int genus = in.genus();
  const auto w = enumerate_toledo_window(*ranks, genus);
  Json j = header("window");
  j["ranks"] = *ranks;
  j["genus"] = genus;
  j["bound"] = w.back().d;
  Json d = Json::array(), entries = Json::array();
  for (const auto& e : w) {
    d.push_back(e.d);
    entries.push_back({{"d", e.d}, {"maximal", e.maximal}, {"cayley", e.cayley}});
  }
  j["d"] = d;
  j["entries"] = entries;
  return {exit_ok, j, ""};
}

Json base_json(const HitchinBase& b) {
  Json j;
  j["degrees"] = b.degrees;
  j["genus"] = b.genus;
  j["summand_dims"] = b.summand_dims;
  j["total_dim"] = b.total_dim;
  j["literature_confirmed"] = b.literature_confirmed;
  j["identity_ok"] = b.identity_checked ? Json(b.identity_ok) : Json(nullptr);
  return j;
}

RunResult cmd_hitchin_base(const Inputs& in) {
  const int genus = in.genus();
  const auto type = in.string(in.cfg().type, "type");
  Json j = header("hitchin-base");
  HitchinBase b;
  if (type) {
    if (*type != "sl") throw ValidationError("field 'type': only 'sl' is supported");
    const auto n = in.integer(in.cfg().n, "n");
    if (!n) throw ValidationError("field 'n': required with --type sl");
    if (*n < 2) throw ValidationError("field 'n': must be at least 2");
    j["type"] = "sl";
    j["n"] = *n;
    j["m"] = 1;
    b = base_dimension(static_cast<std::size_t>(*n), genus);
  } else {
    const GradedDims d = in.dims();
    j["dims"] = d.dims;
    j["m"] = d.m;
    b = base_dimension(build_cyclic_quiver_grading(d), genus, in.cfg().seed);
  }
  j.update(base_json(b));
  return {exit_ok, j, ""};
}

RunResult cmd_point_hitchin(const Inputs& in) {
  const GradedDims d = in.dims();
  const auto sys = build_invariant_system(build_cyclic_quiver_grading(d), in.cfg().seed);
  QuiverPoint phi;
  if (in.has("maps")) {
    const Json& maps = in.doc()["maps"];
    if (!maps.is_array()) throw ValidationError("field 'maps': expected an array of matrices");
    for (const auto& f : maps) phi.maps.push_back(matrix_from_json(f, "maps"));
    try {
      check_shape(d, phi);
    } catch (const DimensionError& e) {
      throw ValidationError(std::string("field 'maps': ") + e.what());
    }
  } else {
    Sampler rng(in.cfg().seed);
    phi = random_quiver_point(d, rng);
  }
  Json j = header("point-hitchin");
  j["dims"] = d.dims;
  j["m"] = d.m;
  j["degrees"] = sys.degrees;
  j["maps"] = quiver_json(phi);
  j["values"] = scalars(pointwise_hitchin(sys, phi));
  return {exit_ok, j, ""};
}

RunResult cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  if (const char* env = std::getenv("VINBERG_MAX_N")) {
    try {
      opt.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw ValidationError("field 'VINBERG_MAX_N': expected an integer");
    }
    if (opt.max_n < 2 || opt.max_n > 8) throw ValidationError("field 'VINBERG_MAX_N': must be in 2..8");
  }
  if (cfg.inject_fault) {
    opt.fault = *cfg.inject_fault;
  } else if (const char* env = std::getenv("VINBERG_INJECT_FAULT")) {
    opt.fault = env;
  }
  if (!opt.fault.empty()) {
    const auto faults = known_faults();
    if (std::find(faults.begin(), faults.end(), opt.fault) == faults.end())
      throw ValidationError("field 'inject-fault': unknown fault '" + opt.fault + "'");
  }
  const auto results = run_verify(opt);
  Json j = header("verify");
  j["max_n"] = opt.max_n;
  j["seed"] = opt.seed;
  j["fault"] = opt.fault.empty() ? Json(nullptr) : Json(opt.fault);
  Json props = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    props.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}});
    ok = ok && r.passed;
  }
  j["properties"] = props;
  j["passed"] = ok;
  return {ok ? exit_ok : exit_certification, j, ok ? "" : "verification failed"};
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    if (std::find(commands.begin(), commands.end(), config.command) == commands.end())
      throw ValidationError("field 'command': unknown command '" + config.command + "'");
    if (config.format != "json" && config.format != "text")
      throw ValidationError("field 'format': expected json or text");
    if (config.command == "verify") return cmd_verify(config);
    const Inputs in(config);
    if (config.command == "grade") return cmd_grade(in);
    if (config.command == "invariants") return cmd_invariants(in);
    if (config.command == "rank") return cmd_rank(in);
    if (config.command == "quasisplit") return cmd_quasisplit(in);
    if (config.command == "toledo") return cmd_toledo(in);
    if (config.command == "window") return cmd_window(in);
    if (config.command == "hitchin-base") return cmd_hitchin_base(in);
    return cmd_point_hitchin(in);
  } catch (const ValidationError& e) {
    return {exit_validation, Json(), e.what()};
  } catch (const DimensionError& e) {
    return {exit_validation, Json(), e.what()};
  } catch (const CertificationError& e) {
    return {exit_certification, Json(), e.what()};
  } catch (const Json::exception& e) {
    return {exit_validation, Json(), std::string("malformed input: ") + e.what()};
  }
}

namespace {

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& field) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw ValidationError("field '" + field + "': expected comma-separated integers");
    }
  }
  if (out.empty()) throw ValidationError("field '" + field + "': empty list");
  return out;
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact computations for cyclic gradings of sl(n), Toledo invariants and Hitchin bases"};
  std::string command;
  std::string dims, ranks, degrees;
  RunConfig cfg;
  app.add_option("command", command, "grade | invariants | rank | quasisplit | toledo | window | "
                                     "hitchin-base | point-hitchin | verify")
      ->required();
  app.add_option("--dims", dims, "block dimensions n_0,...,n_{m-1}");
  app.add_option("--m", cfg.m, "number of blocks (must match --dims / --ranks)");
  app.add_option("--ranks", ranks, "ranks of the bundles E_0,...,E_{m-1}");
  app.add_option("--degrees", degrees, "degrees of E_0,...,E_{m-1} (sum zero)");
  app.add_option("--genus", cfg.genus, "genus of the curve (>= 2)");
  app.add_option("--phi-plus-rank", cfg.phi_plus_rank, "rank of phi+ (default: generic)");
  app.add_option("--phi-minus-rank", cfg.phi_minus_rank, "rank of phi- (default: generic)");
  app.add_option("--type", cfg.type, "Lie type for hitchin-base (sl)");
  app.add_option("--n", cfg.n, "rank parameter for --type sl");
  app.add_option("--seed", cfg.seed, "seed for all random sampling");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--format", cfg.format, "json or text");
  app.add_option("--in", cfg.in, "JSON input document");
  app.add_option("--inject-fault", cfg.inject_fault, "verify: break one property on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_validation;
  }

  cfg.command = command;
  RunResult res;
  try {
    if (!dims.empty()) cfg.dims = parse_list<int>(dims, "dims");
    if (!ranks.empty()) cfg.ranks = parse_list<int>(ranks, "ranks");
    if (!degrees.empty()) cfg.degrees = parse_list<long>(degrees, "degrees");
    res = run(cfg);
  } catch (const ValidationError& e) {
    res = {exit_validation, Json(), e.what()};
  }

  if (!res.report.is_null()) {
    const std::string text = render(res.report, cfg.format);
    if (cfg.out) {
      std::ofstream f(*cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "error: field 'out': cannot write " << *cfg.out << '\n';
        return exit_validation;
      }
      f << text;
    } else {
      std::cout << text;
    }
  }
  if (!res.error.empty()) std::cerr << "error: " << res.error << '\n';
  return res.exit_code;
}

}  // namespace vinberg::cli
