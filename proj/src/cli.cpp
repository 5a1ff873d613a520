// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sepfrontier/entropy.hpp"
#include "sepfrontier/error.hpp"
#include "sepfrontier/frontier.hpp"
#include "sepfrontier/peres.hpp"
#include "sepfrontier/plan.hpp"
#include "sepfrontier/report_io.hpp"
#include "sepfrontier/verify.hpp"

namespace sepfrontier::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string family = "cc";
  std::string spin = "1/2";
  int sites = 2;
  std::string base;
  int c = -1;
  std::string coeffs;
  std::string amplitudes;
  std::string q_grid;
  std::string subset;
  std::size_t cap = SystemShape::kDefaultCap;
  std::optional<int> max_subset_size;
  std::string scope = "all";
  std::string format = "csv";
  std::string output;
  std::string plan;
  std::uint64_t seed = 42;
  bool inject_perturbation = false;
  std::string spectrum_of = "pt";
  double x = 0.5;
};

// Re-raises library errors with the offending flag named.
template <typename F>
auto with_flag(const std::string& flag, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), flag + ": " + e.detail());
  }
}

SystemShape make_shape(const RunConfig& cfg) {
  const Spin spin = with_flag("--spin", [&] { return Spin::parse(cfg.spin); });
  return with_flag("--sites", [&] { return SystemShape(spin, cfg.sites, cfg.cap); });
}

StateVector read_amplitudes(const std::string& path, const SystemShape& shape) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open amplitude file '" + path + "'");
  std::vector<Complex> values;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
               line.end());
    if (line.empty() || line.front() == '#') continue;
    values.push_back(parse_complex(line));
  }
  if (values.size() != shape.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "amplitude file has " + std::to_string(values.size()) +
                                              " entries, expected D^N = " + std::to_string(shape.dim()));
  }
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return StateVector::normalized(std::move(v));
}

StateInput make_state(const RunConfig& cfg, const SystemShape& shape) {
  if (cfg.family == "cc") {
    CCStateSpec spec{cfg.base.empty() ? default_cc_base(shape)
                                      : with_flag("--base", [&] { return SpinConfig::parse(cfg.base); }),
                     cfg.c};
    return with_flag("--base", [&] { return StateInput::from_cc(std::move(spec), shape); });
  }
  if (cfg.family == "werner") {
    return with_flag("--coeffs", [&] {
      WernerSpec spec = cfg.coeffs.empty() ? WernerSpec::uniform(shape) : WernerSpec::parse(cfg.coeffs);
      return StateInput::from_werner(std::move(spec), shape);
    });
  }
  if (cfg.amplitudes.empty()) {
    throw Error(ErrorKind::Parse, "--amplitudes: the custom family needs an amplitude file");
  }
  return with_flag("--amplitudes",
                   [&] { return StateInput::from_custom(read_amplitudes(cfg.amplitudes, shape)); });
}

std::vector<double> q_values(const RunConfig& cfg) {
  if (cfg.q_grid.empty()) return default_q_grid();
  return with_flag("--q-grid", [&] { return parse_q_list(cfg.q_grid); });
}

EntropicScope scope_of(const RunConfig& cfg) {
  return cfg.scope == "largest" ? EntropicScope::LargestSubsets : EntropicScope::AllSubsets;
}

std::optional<SiteSubset> subset_of(const RunConfig& cfg, const SystemShape& shape) {
  if (cfg.subset.empty()) return std::nullopt;
  return with_flag("--subset", [&] {
    SiteSubset s = SiteSubset::parse(cfg.subset);
    s.validate(shape);
    return s;
  });
}

std::string shape_columns(const StateInput& state, const SystemShape& shape) {
  return to_string(state.kind) + "," + std::to_string(shape.local_dim()) + "," + shape.spin().to_string() +
         "," + std::to_string(shape.sites());
}

Json shape_json(const SystemShape& shape) {
  return {{"spin", shape.spin().to_string()},
          {"sites", shape.sites()},
          {"local_dim", shape.local_dim()},
          {"dim", shape.dim()}};
}

std::optional<double> peres_closed_form(const StateInput& state, const SystemShape& shape) {
  if (state.kind == FamilyKind::CC && cc_closed_form_applies(*state.cc)) return cc_peres_closed_form(shape);
  if (state.kind == FamilyKind::Werner) return werner_peres_closed_form(*state.werner, shape).x_c;
  return std::nullopt;
}

std::optional<double> entropic_closed_form(const StateInput& state, const SystemShape& shape) {
  if (state.kind == FamilyKind::CC && cc_closed_form_applies(*state.cc)) return cc_entropic_closed_form(shape);
  if (state.kind == FamilyKind::Werner && state.werner->nonzero_count() >= 2) {
    return werner_entropic_closed_form(*state.werner, shape).x_c;
  }
  return std::nullopt;
}

int cmd_frontier(const RunConfig& cfg, std::ostream& os) {
  const SystemShape shape = make_shape(cfg);
  const StateInput state = make_state(cfg, shape);
  CompareOptions options;
  options.q_grid = q_values(cfg);
  options.max_subset_size = cfg.max_subset_size;
  options.scope = scope_of(cfg);
  const FrontierReport report = compare(state, shape, options);
  if (cfg.format == "json") {
    os << to_json(report).dump(2) << '\n';
  } else {
    write_csv(os, {report});
  }
  return kSuccess;
}

int cmd_peres(const RunConfig& cfg, std::ostream& os) {
  const SystemShape shape = make_shape(cfg);
  const StateInput state = make_state(cfg, shape);
  const HermitianMatrix rho = pure_density(state.vector, shape);
  const auto subset = subset_of(cfg, shape);
  const PTBound bound =
      subset ? peres_bound(rho, *subset, shape) : best_peres_bound(rho, shape, cfg.max_subset_size);
  const auto closed = peres_closed_form(state, shape);
  if (cfg.format == "json") {
    Json j{{"family", state.describe()},
           {"shape", shape_json(shape)},
           {"subset", bound.subset.to_string()},
           {"witness", json_number(bound.witness)},
           {"x_c_peres", json_optional(bound.x_c)},
           {"closed_form", json_optional(closed)}};
    os << j.dump(2) << '\n';
  } else {
    os << "family,D,S,N,subset,witness,x_c_peres,closed_form\n"
       << shape_columns(state, shape) << ',' << csv_field(bound.subset.to_string()) << ','
       << format_number(bound.witness) << ',' << format_optional(bound.x_c) << ','
       << format_optional(closed) << '\n';
  }
  return kSuccess;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& os) {
  const SystemShape shape = make_shape(cfg);
  const StateInput state = make_state(cfg, shape);
  const HermitianMatrix rho = pure_density(state.vector, shape);
  const auto qs = q_values(cfg);
  const auto subset = subset_of(cfg, shape);
  std::vector<EntropicBound> bounds;
  if (subset) {
    const PurityBalance balance = with_flag("--subset", [&] { return PurityBalance(rho, *subset, shape); });
    for (double q : qs) bounds.push_back(balance.solve(q));
  } else {
    bounds = best_entropic_bounds(rho, shape, qs, scope_of(cfg));
  }
  const auto closed = entropic_closed_form(state, shape);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& b : bounds) {
      Json row{{"q", json_number(b.q)},
               {"subset", b.subset.to_string()},
               {"x_c_entropy", json_optional(b.x_c)},
               {"v_bar", json_optional(b.v_bar)},
               {"residual", json_optional(b.residual)}};
      if (std::isinf(b.q)) row["closed_form"] = json_optional(closed);
      rows.push_back(std::move(row));
    }
    os << Json{{"family", state.describe()}, {"shape", shape_json(shape)}, {"bounds", rows}}.dump(2) << '\n';
  } else {
    os << "family,D,S,N,subset,q,x_c_entropy,v_bar,residual,closed_form\n";
    for (const auto& b : bounds) {
      os << shape_columns(state, shape) << ',' << csv_field(b.subset.to_string()) << ',' << format_number(b.q) << ','
         << format_optional(b.x_c) << ',' << format_optional(b.v_bar) << ','
         << format_optional(b.residual) << ','
         << (std::isinf(b.q) ? format_optional(closed) : std::string("none")) << '\n';
    }
  }
  return kSuccess;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  const SystemShape shape = make_shape(cfg);
  const StateInput state = make_state(cfg, shape);
  const HermitianMatrix rho = pure_density(state.vector, shape);
  const SiteSubset subset = subset_of(cfg, shape).value_or(SiteSubset({shape.sites()}));

  Spectrum dense;
  std::optional<Spectrum> analytic;
  if (cfg.spectrum_of == "pt") {
    dense = eigenvalues(partial_transpose(rho, subset, shape));
    if (subset.size() == 1 && shape.sites() >= 2) {
      if (state.kind == FamilyKind::Werner) analytic = werner_pt_spectrum(*state.werner, shape);
      if (state.kind == FamilyKind::CC && cc_closed_form_applies(*state.cc)) {
        // The closed form needs a non-zero transposed site and another non-zero site elsewhere.
        const auto& v = state.cc->base.twice_values();
        if (v[static_cast<std::size_t>(subset.sites().front() - 1)] != 0) analytic = cc_pt_spectrum(shape);
      }
    }
  } else if (cfg.spectrum_of == "reduced") {
    dense = eigenvalues(with_flag("--subset", [&] { return partial_trace(rho, subset, shape); }));
  } else {
    const MixedFamilyPoint point = with_flag("--x", [&] { return MixedFamilyPoint(rho, cfg.x, shape); });
    dense = eigenvalues(family_density(point));
    analytic = family_spectrum(cfg.x, shape);
  }

  if (cfg.format == "json") {
    Json values = Json::array();
    for (double v : dense.values()) values.push_back(json_number(v));
    Json j{{"family", state.describe()}, {"shape", shape_json(shape)}, {"of", cfg.spectrum_of},
           {"subset", subset.to_string()}, {"dense", values}};
    if (analytic) {
      Json a = Json::array();
      for (double v : analytic->values()) a.push_back(json_number(v));
      j["analytic"] = std::move(a);
    }
    os << j.dump(2) << '\n';
  } else {
    os << "index,dense,analytic\n";
    for (std::size_t i = 0; i < dense.dim(); ++i) {
      os << i << ',' << format_number(dense.values()[i]) << ','
         << (analytic ? format_number(analytic->values()[i]) : std::string("none")) << '\n';
    }
  }
  return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, const CLI::App& sub, std::ostream& os) {
  SweepPlan plan = cfg.plan.empty() ? default_sweep_plan() : load_plan(cfg.plan);
  if (sub.count("--cap")) plan.cap = cfg.cap;
  if (sub.count("--q-grid")) plan.q_grid = q_values(cfg);
  if (sub.count("--max-subset-size")) plan.max_subset_size = cfg.max_subset_size;
  const auto rows = sweep(plan);
  if (cfg.format == "json") {
    os << to_json(rows).dump(2) << '\n';
  } else {
    write_csv(os, rows);
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.inject_perturbation = cfg.inject_perturbation;
  const auto results = run_verify(options, os);
  const auto failed = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  os << passed << "/" << results.size() << " checks passed\n";
  if (failed != results.end()) {
    os << "first failure: " << failed->name << " -- " << failed->inputs << " (seed " << cfg.seed << ")\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

void add_state_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--family", cfg.family, "State family")->check(CLI::IsMember({"cc", "werner", "custom"}));
  app.add_option("--spin", cfg.spin, "Spin S, e.g. 1/2, 1, 3/2");
  app.add_option("--sites", cfg.sites, "Number of sites N");
  app.add_option("--base", cfg.base, "CC base configuration, e.g. +1/2,-1/2 (default +S,-S,...,-S)");
  app.add_option("--c", cfg.c, "CC sign, +1 or -1")->check(CLI::IsMember({-1, 1}));
  app.add_option("--coeffs", cfg.coeffs, "Werner coefficients a_-S..a_S in a+bi syntax (default uniform)");
  app.add_option("--amplitudes", cfg.amplitudes, "Custom amplitude file, one a+bi per line");
  app.add_option("--cap", cfg.cap, "Dimension cap on D^N")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", cfg.output, "Output file (default standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Separability frontier bounds for noisy entangled spin registers", "sepfrontier"};
  app.require_subcommand(1);

  auto* frontier = app.add_subcommand("frontier", "Peres and entropic bounds side by side");
  auto* peres = app.add_subcommand("peres", "Partial-transpose bound");
  auto* entropy = app.add_subcommand("entropy", "Conditional-entropy bounds over a q grid");
  auto* spectrum = app.add_subcommand("spectrum", "Dense spectra, with closed forms where known");
  auto* sweep_cmd = app.add_subcommand("sweep", "Reports over a parameter grid");
  auto* verify = app.add_subcommand("verify", "Closed-form vs numeric cross-check battery");

  for (auto* sub : {frontier, peres, entropy, spectrum}) {
    add_state_options(*sub, cfg);
    add_output_options(*sub, cfg);
  }
  for (auto* sub : {frontier, peres, sweep_cmd}) {
    sub->add_option("--max-subset-size", cfg.max_subset_size, "Largest transposed subset searched");
  }
  for (auto* sub : {frontier, entropy, sweep_cmd}) {
    sub->add_option("--q-grid", cfg.q_grid, "Comma-separated q values, 'inf' allowed");
  }
  for (auto* sub : {frontier, entropy}) {
    sub->add_option("--scope", cfg.scope, "Retained subsets searched")->check(CLI::IsMember({"all", "largest"}));
  }
  for (auto* sub : {peres, entropy, spectrum}) {
    sub->add_option("--subset", cfg.subset, "Site subset, e.g. 1,3");
  }
  spectrum->add_option("--of", cfg.spectrum_of, "Which spectrum")->check(CLI::IsMember({"pt", "reduced", "family"}));
  spectrum->add_option("--x", cfg.x, "Mixing weight for --of family");
  sweep_cmd->add_option("--plan", cfg.plan, "Plan file (default grid when omitted)");
  sweep_cmd->add_option("--cap", cfg.cap, "Dimension cap on D^N")->check(CLI::PositiveNumber);
  add_output_options(*sweep_cmd, cfg);
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_flag("--inject-perturbation", cfg.inject_perturbation)->group("");  // negative-control hook

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (*frontier) {
      code = cmd_frontier(cfg, buffer);
    } else if (*peres) {
      code = cmd_peres(cfg, buffer);
    } else if (*entropy) {
      code = cmd_entropy(cfg, buffer);
    } else if (*spectrum) {
      code = cmd_spectrum(cfg, buffer);
    } else if (*sweep_cmd) {
      code = cmd_sweep(cfg, *sweep_cmd, buffer);
    } else if (*verify) {
      code = cmd_verify(cfg, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NumericalContract ? kNumericalBreach : kInvalidInput;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: --output: cannot write '" << cfg.output << "'\n";
      return kInvalidInput;
    }
  }
  return code;
}

}  // namespace sepfrontier::cli
