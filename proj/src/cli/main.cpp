#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hmv/cube.hpp"
#include "hmv/dieudonne.hpp"
#include "hmv/errors.hpp"
#include "hmv/functoriality.hpp"
#include "hmv/sampling.hpp"
#include "hmv/serialize.hpp"
#include "hmv/strata.hpp"
#include "hmv/valuation.hpp"
#include "hmv/verify.hpp"

namespace {

using namespace hmv;

struct Globals {
  std::string splitting = "p=2;f=2";
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string config;
  long long guard = 10'000'000;
  std::uint64_t enum_guard = kDefaultEnumGuard;
};

void apply_config(Globals& g, const CLI::App& app) {
  if (g.config.empty()) return;
  std::ifstream in(g.config);
  if (!in) throw std::invalid_argument("cannot open config file: " + g.config);
  Json cfg;
  try {
    in >> cfg;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("config file is not valid JSON: " +
                                std::string(e.what()));
  }
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (it.key() == "splitting") {
      if (app.count("--splitting") == 0) g.splitting = it->get<std::string>();
    } else if (it.key() == "format") {
      if (app.count("--format") == 0) g.format = it->get<std::string>();
    } else if (it.key() == "seed") {
      if (app.count("--seed") == 0) g.seed = it->get<std::uint64_t>();
    } else {
      throw std::invalid_argument("unknown config key: " + it.key());
    }
  }
}

void apply_env_guard(Globals& g) {
  const char* raw = std::getenv("HMV_GUARD_MAX");
  if (!raw) return;
  try {
    size_t used = 0;
    long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0)
      throw std::invalid_argument(raw);
    g.guard = v;
    g.enum_guard = static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "HMV_GUARD_MAX must be a positive integer, got '" + std::string(raw) +
        "'");
  }
}

ValuationVector make_vector(const SplittingPtr& s, const std::string& list,
                            Role role) {
  return {s, parse_rational_list(list), role};
}

std::uint32_t parse_prime_list(const SplittingPtr& s, const std::string& text) {
  std::uint32_t mask = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int i = std::stoi(item, &used);
      if (used != item.size() || i < 0 || i >= s->prime_count())
        throw std::invalid_argument(item);
      mask |= 1u << i;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad prime index '" + item + "' for " +
                                  s->to_string());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mask;
}

const char* class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::Canonical: return "canonical";
    case PrimeClass::AntiCanonical: return "anti-canonical";
    default: return "too-singular";
  }
}

Json classes_of(const ValuationVector& y) {
  Json out = Json::array();
  for (int i = 0; i < y.splitting()->prime_count(); ++i)
    out.push_back(class_name(classify_at_prime(y, i)));
  return out;
}

Json lambda_json(const ValuationVector& nu) {
  Json out = Json::array();
  for (const Rat& l : lambda_table(nu)) out.push_back(json_of(l));
  return out;
}

// regime of the quotient applied to y, per prime
std::string rule_at_prime(const ValuationVector& y, int prime) {
  const auto& s = y.splitting();
  bool lt1 = true, gt1 = true, gtp = true;
  for (int j = 0; j < s->degree(prime); ++j) {
    Rat l = lambda(y, s->index_of(prime, j));
    if (!(l < Rat(1))) lt1 = false;
    if (!(l > Rat(1))) gt1 = false;
    if (!(l > Rat(s->p()))) gtp = false;
  }
  if (lt1) return "hecke-1";
  if (gtp) return "hecke-4";
  if (gt1) return "hecke-2";
  return "error-3";
}

Json rules_of(const ValuationVector& y) {
  Json out = Json::array();
  for (int i = 0; i < y.splitting()->prime_count(); ++i)
    out.push_back(rule_at_prime(y, i));
  return out;
}

int cmd_up_orbit(const Globals& g, const std::string& nu_text, int steps,
                 bool y_start) {
  auto s = PrimeSplitting::parse(g.splitting);
  if (steps < 0 || steps > 10'000)
    throw std::invalid_argument("--steps must be between 0 and 10000");
  Json trace = Json::array();
  std::string stopped = "steps";
  std::optional<ValuationVector> y;
  ValuationVector x = make_vector(s, nu_text, Role::XPoint);
  if (y_start) {
    y = make_vector(s, nu_text, Role::YPoint);
  } else {
    y = section_dagger(x);  // throws with a witness when x is outside U
  }
  for (int k = 0; k < steps; ++k) {
    Json step;
    step["nu"] = json_of(y_start && k == 0 ? *y : x.with_role(Role::YPoint));
    step["role"] = y_start && k == 0 ? "Y" : "X";
    step["face"] = json_of(face_of_vector(s, y->values()));
    step["lambda"] = lambda_json(*y);
    step["classes"] = classes_of(*y);
    step["rule"] = rules_of(*y);
    ValuationVector next = x;
    try {
      next = quotient_valuation(*y);
    } catch (const RegionError& e) {
      step["error"] = e.what();
      trace.push_back(step);
      stopped = "error-3";
      break;
    }
    trace.push_back(step);
    bool fixed = !(y_start && k == 0) && next == x;
    x = next;
    if (fixed) {
      stopped = "fixed-point";
      break;
    }
    if (k + 1 < steps) {
      if (!in_U(x)) {
        stopped = "left-region";
        break;
      }
      y = section_dagger(x);
    }
  }
  if (stopped == "steps" || stopped == "fixed-point") {
    Json final_state;
    final_state["nu"] = json_of(x);
    final_state["role"] = "X";
    final_state["face"] = json_of(face_of_vector(s, x.values()));
    final_state["lambda"] = lambda_json(x);
    trace.push_back(final_state);
  }
  Json out;
  out["splitting"] = s->to_string();
  out["steps"] = trace;
  out["stopped"] = stopped;
  std::cout << render(out, g.format);
  return 0;
}

int print_verify(const VerifyReport& report) {
  for (const auto& item : report.items) {
    std::cout << item.suite << "/" << item.check << ": "
              << (item.ok ? "PASS" : "FAIL");
    if (!item.ok) std::cout << "  [" << item.witness << "]";
    std::cout << "\n";
  }
  std::cout << (report.all_ok() ? "all suites passed"
                                : "verification FAILED")
            << "\n";
  return report.all_ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{
      "stratification combinatorics and canonical-subgroup valuation "
      "dynamics for Hilbert modular varieties at Gamma_0(p) level"};
  app.require_subcommand(1);
  app.add_option("--splitting", g.splitting,
                 "prime splitting, e.g. \"p=3;f=2,1\" (';' or ':')");
  app.add_option("--format", g.format, "output format: json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--config", g.config,
                 "JSON file with defaults for splitting/format/seed");

  // strata
  auto* strata = app.add_subcommand("strata", "stratum lattice tables");
  strata->require_subcommand(1);
  auto* strata_count =
      strata->add_subcommand("count", "number of admissible pairs (3^g)");
  std::string t_list;
  auto* strata_enum =
      strata->add_subcommand("enumerate", "all strata with invariants");
  strata_enum->add_option(
      "--t", t_list, "restrict to the ideal spanned by these prime indices");

  // cube
  auto* cube = app.add_subcommand("cube", "valuation cube faces");
  cube->require_subcommand(1);
  std::string nu_text;
  auto* cube_face =
      cube->add_subcommand("face", "open face containing a vector");
  cube_face->add_option("--nu", nu_text, "rational vector \"1/2,0,1\"")
      ->required();
  auto* cube_lattice =
      cube->add_subcommand("lattice", "all faces with their strata");

  // dyn
  auto* dyn = app.add_subcommand("dyn", "valuation dynamics");
  dyn->require_subcommand(1);
  std::string dyn_nu;
  auto* dyn_classify =
      dyn->add_subcommand("classify", "per-prime subgroup classification");
  dyn_classify->add_option("--nu", dyn_nu, "Y-point valuation vector")
      ->required();
  std::string sec_nu, sec_t;
  auto* dyn_section =
      dyn->add_subcommand("section", "canonical subgroup of an X-point");
  dyn_section->add_option("--nu", sec_nu, "X-point valuation vector")
      ->required();
  dyn_section->add_option("--t", sec_t,
                          "certify only at these prime indices");
  std::string orbit_nu;
  int orbit_steps = 1;
  bool orbit_y = false;
  auto* dyn_orbit = dyn->add_subcommand(
      "up-orbit", "iterate the quotient correspondence with annotations");
  dyn_orbit->add_option("--nu", orbit_nu, "starting valuation vector")
      ->required();
  dyn_orbit->add_option("--steps", orbit_steps, "number of quotient steps");
  dyn_orbit->add_flag("--y", orbit_y,
                      "treat --nu as an explicit Y-point for the first step");
  std::string iter_nu;
  int iter_n = 1;
  auto* dyn_iterate = dyn->add_subcommand(
      "iterate", "canonical tower: subgroups of order p^(n+1)");
  dyn_iterate->add_option("--nu", iter_nu, "X-point valuation vector")
      ->required();
  dyn_iterate->add_option("-n,--n", iter_n, "tower height");

  // oracle
  auto* oracle =
      app.add_subcommand("oracle", "finite-field line-tuple enumeration");
  oracle->require_subcommand(1);
  std::string tau_text = "empty";
  long long q_value = 0;
  bool spaced_flag = false;
  auto* oracle_census = oracle->add_subcommand(
      "census", "stable tuples per stratum over GF(q)");
  oracle_census->add_option(
      "--tau", tau_text, "type subset: full, empty, or \"(i,j),(i,j)\"");
  oracle_census->add_option("--q", q_value, "field size, a power of p")
      ->required();
  oracle_census->add_flag("--spaced", spaced_flag,
                          "emit the spaced-subset census (needs --tau full)");
  std::string oracle_suite = "all";
  auto* oracle_verify =
      oracle->add_subcommand("verify", "oracle invariant batteries");
  oracle_verify->add_option(
      "--suite", oracle_suite,
      "window | spaced law | free choice | product law | all");

  // funct
  auto* funct = app.add_subcommand("funct", "base change and Galois action");
  funct->require_subcommand(1);
  std::string ext_text, funct_nu;
  auto* funct_lift =
      funct->add_subcommand("lift", "pull a vector back along an extension");
  funct_lift
      ->add_option("--ext", ext_text,
                   "extension \"<src>-><dst>:cover=j0,j1,...\"")
      ->required();
  funct_lift->add_option("--nu", funct_nu, "vector over the source")
      ->required();
  long long galois_k = 0;
  std::string galois_nu;
  auto* funct_galois =
      funct->add_subcommand("galois", "act by the Frobenius power sigma^k");
  funct_galois->add_option("--k", galois_k, "exponent")->required();
  funct_galois->add_option("--nu", galois_nu, "vector to relabel")
      ->required();

  // verify
  int samples = 1000;
  std::string suite = "all";
  std::string corrupt;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suite,
                     "strata | cube | dynamics | oracle | funct | all");
  verify->add_option("--samples", samples, "sample count per properties");
  verify->add_option(
      "--corrupt-lambda-threshold", corrupt,
      "testing-only negative control: misclassify against this threshold");

  for (auto* sub : app.get_subcommands({}))
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    apply_env_guard(g);
    apply_config(g, app);

    if (strata_count->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto pairs = enumerate_admissible(s, g.enum_guard);
      Json out;
      out["splitting"] = s->to_string();
      out["count"] = pairs.size();
      std::cout << render(out, g.format);
      return 0;
    }
    if (strata_enum->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      Json rows = Json::array();
      if (strata_enum->count("--t") > 0) {
        auto mask = parse_prime_list(s, t_list);
        for (const auto& pr :
             enumerate_t_admissible(s, mask, g.enum_guard)) {
          Json row;
          row["phi"] = json_of(pr.phi);
          row["eta"] = json_of(pr.eta);
          rows.push_back(std::move(row));
        }
      } else {
        for (const auto& pr : enumerate_admissible(s, g.enum_guard))
          rows.push_back(json_of(pr));
      }
      std::cout << render(rows, g.format);
      return 0;
    }
    if (cube_face->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto values = parse_rational_list(nu_text);
      auto face = face_of_vector(s, values);
      auto pr = face_to_pair(face);
      Json out;
      out["face"] = json_of(face);
      out["phi"] = json_of(pr.phi);
      out["eta"] = json_of(pr.eta);
      out["face_dim"] = face.dim();
      out["stratum_dim"] = stratum_dim(pr);
      std::cout << render(out, g.format);
      return 0;
    }
    if (cube_lattice->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      Json rows = Json::array();
      for (const auto& face : enumerate_faces(s, g.enum_guard)) {
        auto pr = face_to_pair(face);
        Json row;
        row["face"] = json_of(face);
        row["phi"] = json_of(pr.phi);
        row["eta"] = json_of(pr.eta);
        row["face_dim"] = face.dim();
        row["stratum_dim"] = stratum_dim(pr);
        rows.push_back(std::move(row));
      }
      std::cout << render(rows, g.format);
      return 0;
    }
    if (dyn_classify->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto y = make_vector(s, dyn_nu, Role::YPoint);
      Json out;
      out["nu"] = json_of(y);
      out["lambda"] = lambda_json(y);
      out["classes"] = classes_of(y);
      out["in_U_as_X"] = in_U(y.with_role(Role::XPoint));
      std::cout << render(out, g.format);
      return 0;
    }
    if (dyn_section->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto x = make_vector(s, sec_nu, Role::XPoint);
      std::optional<std::uint32_t> mask;
      if (dyn_section->count("--t") > 0) mask = parse_prime_list(s, sec_t);
      auto y = section_dagger(x, mask);
      Json out;
      out["nu_x"] = json_of(x);
      out["nu_y"] = json_of(y);
      Json certified = Json::array();
      std::uint32_t bits = mask.value_or(s->all_primes());
      for (int i = 0; i < s->prime_count(); ++i)
        if (bits & (1u << i)) certified.push_back(i);
      out["certified_primes"] = certified;
      std::cout << render(out, g.format);
      return 0;
    }
    if (dyn_orbit->parsed()) return cmd_up_orbit(g, orbit_nu, orbit_steps, orbit_y);
    if (dyn_iterate->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto x = make_vector(s, iter_nu, Role::XPoint);
      auto chain = iterate_canonical(x, iter_n);
      Json out;
      out["nu"] = json_of(x);
      Json steps = Json::array();
      for (const auto& step : chain) steps.push_back(json_of(step));
      out["chain"] = steps;
      Json precision = Json::array();
      for (int i = 1; i <= iter_n; ++i)
        precision.push_back(
            json_of(reduction_precision(x, i, ReductionKind::Canonical)));
      out["reduction_precision"] = precision;
      std::cout << render(out, g.format);
      return 0;
    }
    if (oracle_census->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      long long p = s->p(), q = q_value;
      int m = 0;
      while (q > 1 && q % p == 0) q /= p, ++m;
      if (q != 1 || m == 0)
        throw std::invalid_argument("--q must be a positive power of p=" +
                                    std::to_string(p));
      DieudonneModel model(s, parse_embset(s, tau_text), m);
      Json out;
      if (spaced_flag)
        out = json_of_spaced(s, spaced_census(model, g.guard));
      else
        out = json_of_census(s, fibre_census(model, g.guard));
      std::cout << render(out, g.format);
      return 0;
    }
    if (oracle_verify->parsed()) {
      VerifyOptions opts;
      opts.splitting = PrimeSplitting::parse(g.splitting);
      opts.seed = g.seed;
      opts.oracle_guard = g.guard;
      auto report = run_verify(opts, "oracle");
      if (oracle_suite != "all") {
        VerifyReport filtered;
        for (const auto& item : report.items)
          if (item.check == oracle_suite) filtered.items.push_back(item);
        if (filtered.items.empty())
          throw std::invalid_argument("unknown oracle battery: " +
                                      oracle_suite);
        return print_verify(filtered);
      }
      return print_verify(report);
    }
    if (funct_lift->parsed()) {
      auto ext = ExtensionMap::parse(ext_text);
      if (!ext.covers_all_sources())
        std::cerr << "note: cover leaves some source primes orphaned; the "
                     "region preimage identities only see the covered part\n";
      auto nu = make_vector(ext.source(), funct_nu, Role::XPoint);
      auto up = delta(ext, nu);
      Json out;
      out["extension"] = ext.to_string();
      out["nu"] = json_of(nu);
      out["lifted"] = json_of(up);
      out["in_U_source"] = in_U(nu);
      out["in_U_target"] = in_U(up);
      std::cout << render(out, g.format);
      return 0;
    }
    if (funct_galois->parsed()) {
      auto s = PrimeSplitting::parse(g.splitting);
      auto nu = make_vector(s, galois_nu, Role::YPoint);
      Json out;
      out["k"] = galois_k;
      out["nu"] = json_of(nu);
      out["image"] = json_of(galois_act(galois_k, nu));
      std::cout << render(out, g.format);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.splitting = PrimeSplitting::parse(g.splitting);
      opts.samples = samples;
      opts.seed = g.seed;
      opts.oracle_guard = g.guard;
      if (!corrupt.empty()) {
        auto vals = parse_rational_list(corrupt);
        if (vals.size() != 1)
          throw std::invalid_argument(
              "--corrupt-lambda-threshold takes one rational");
        opts.corrupt_lambda_threshold = vals[0];
      }
      return print_verify(run_verify(opts, suite));
    }
    throw std::invalid_argument("no command selected");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const RegionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
