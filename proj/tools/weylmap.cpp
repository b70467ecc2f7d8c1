// Copyright 2026 The weylmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// weylmap: command-line front end.
//
//   weylmap subgroups --d 3 [--k 3] [--json]
//   weylmap rates     --spec <path|json> [grid flags] [--out rates.csv]
//   weylmap classify  --spec <path|json> [grid flags] [--tol 1e-12]
//   weylmap mixture   --spec <path|json> [grid flags]
//   weylmap acceptance [--filter name[,name]] [--seed 42] [--tol x]
//
// Exit codes: 0 ok, 1 acceptance failure, 2 usage or parse error,
// 3 noninvertible map.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "acceptance/acceptance.hpp"
#include "weyl/classify.hpp"
#include "weyl/dynamics.hpp"
#include "weyl/errors.hpp"
#include "weyl/io.hpp"
#include "weyl/kernels.hpp"
#include "weyl/mixtures.hpp"
#include "weyl/phase_space.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAcceptanceFailure = 1;
constexpr int kUsage = 2;
constexpr int kNoninvertible = 3;

struct GridFlags {
  double t_min = 1e-3;
  double t_max = 10.0;
  int points = 64;
  std::string spacing = "log";

  std::vector<double> times() const {
    weyl::TimeGrid g;
    g.t_min = t_min;
    g.t_max = t_max;
    g.points = points;
    g.spacing = spacing == "linear" ? weyl::GridSpacing::Linear : weyl::GridSpacing::Log;
    return g.times();
  }
};

void add_grid(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--t-min", g.t_min, "first grid time")->capture_default_str();
  cmd->add_option("--t-max", g.t_max, "last grid time")->capture_default_str();
  cmd->add_option("--points", g.points, "number of grid points")->capture_default_str();
  cmd->add_option("--spacing", g.spacing, "log or linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw weyl::InvalidArgument("cannot write " + out);
  f << text;
}

std::string pretty(const weyl::io::Json& j) { return j.dump(2) + "\n"; }

// order == 0 tabulates every order.
std::string subgroup_listing(int d, long order, bool json) {
  using weyl::io::Json;
  const auto describe = [](const weyl::SubgroupHNF& g) {
    const auto type = weyl::classify_subgroup(g);
    const auto dual = weyl::dual_subgroup(g);
    return Json{{"m", g.m()}, {"w", g.w()}, {"n", g.n()}, {"order", g.order()},
                {"type", weyl::to_string(type.kind)}, {"nu", type.nu},
                {"dual", {{"m", dual.m()}, {"w", dual.w()}, {"n", dual.n()}}}};
  };
  if (order != 0) {
    Json rows = Json::array();
    for (const auto& g : weyl::enumerate_subgroups(d, order)) rows.push_back(describe(g));
    if (json) return pretty(Json{{"d", d}, {"order", order}, {"count", rows.size()}, {"subgroups", rows}});
    std::ostringstream os;
    os << "# d=" << d << " K=" << order << " count=" << rows.size() << "\n";
    os << "m\tw\tn\torder\ttype\tnu\tdual(m,w,n)\n";
    for (const auto& r : rows) {
      os << r["m"] << '\t' << r["w"] << '\t' << r["n"] << '\t' << r["order"] << '\t'
         << r["type"].get<std::string>() << '\t' << r["nu"] << "\t(" << r["dual"]["m"] << ','
         << r["dual"]["w"] << ',' << r["dual"]["n"] << ")\n";
    }
    return os.str();
  }
  std::map<long, long> counts;
  for (long k : weyl::divisors(long{d} * d)) counts[k] = weyl::count_subgroups(d, k);
  long best = 0;
  for (const auto& [k, c] : counts) best = std::max(best, c);
  if (json) {
    Json rows = Json::array();
    for (const auto& [k, c] : counts) rows.push_back({{"order", k}, {"count", c}, {"max", c == best}});
    return pretty(Json{{"d", d}, {"orders", rows}, {"max_count", best}, {"sigma1", weyl::sigma1(d)}});
  }
  std::ostringstream os;
  os << "# d=" << d << " sigma1(d)=" << weyl::sigma1(d) << "\n";
  os << "order\tcount\n";
  for (const auto& [k, c] : counts) os << k << '\t' << c << (c == best ? "\t*max" : "") << "\n";
  return os.str();
}

weyl::RateSource dft_source(const weyl::WeylDynamics& dyn) {
  return [dyn](double t) { return weyl::decay_rates(dyn, t); };
}

std::string mixture_report(const weyl::MixtureSpec& mix, const std::vector<double>& grid, double tol) {
  using weyl::io::Json;
  const auto cov = weyl::coverage_report(mix);
  Json report{{"spec", weyl::io::to_json(mix)},
              {"semigroup_mode", mix.semigroup_mode()},
              {"covered", weyl::io::elements_to_json(cov.covered)},
              {"uncovered", weyl::io::elements_to_json(cov.uncovered)},
              {"dual_intersections", weyl::io::elements_to_json(cov.dual_intersections)}};
  Json mult = Json::array();
  for (double x : cov.multiplicity) mult.push_back(x);
  report["dual_multiplicity"] = mult;
  if (mix.has_common_order() && mix.common_order() >= 2) {
    const auto b = weyl::enm_mixture_bound(mix.d(), mix.common_order());
    report["bound"] = Json{{"K", mix.common_order()}, {"bound", b.bound},
                           {"admissible", {b.n_min, b.n_max}}, {"N", mix.size()},
                           {"within", !b.empty() && static_cast<int>(mix.size()) >= b.n_min &&
                                          static_cast<int>(mix.size()) <= b.n_max}};
  } else {
    report["bound"] = nullptr;
  }
  report["verdict"] = weyl::io::to_json(weyl::enm_on_grid(dft_source(mix.dynamics()), grid, tol));
  return pretty(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl dynamical maps: subgroups, decay rates and Markovianity verdicts"};
  app.require_subcommand(1);

  int d = 0;
  long k = 0;
  bool json = false;
  std::string spec, out, filter;
  GridFlags grid;
  double tol = weyl::kDefaultRateTolerance;
  std::uint64_t seed = 42;

  auto* sub = app.add_subcommand("subgroups", "list subgroups of Z_d x Z_d");
  sub->add_option("--d", d, "dimension")->required()->check(CLI::Range(2, 4096));
  auto* k_opt = sub->add_option("--k", k, "subgroup order (must divide d^2)");
  sub->add_flag("--json", json, "emit JSON");
  sub->add_option("--out", out, "output file");

  auto* rates = app.add_subcommand("rates", "decay-rate trace as CSV");
  rates->add_option("--spec", spec, "spec file or inline JSON")->required();
  add_grid(rates, grid);
  rates->add_option("--out", out, "output file");

  auto* classify = app.add_subcommand("classify", "Markovianity verdict as JSON");
  classify->add_option("--spec", spec, "spec file or inline JSON")->required();
  add_grid(classify, grid);
  classify->add_option("--tol", tol, "rate-sign tolerance")->check(CLI::PositiveNumber);
  classify->add_option("--out", out, "output file");

  auto* mixture = app.add_subcommand("mixture", "coverage, bound and verdict of a mixture");
  mixture->add_option("--spec", spec, "mixture spec file or inline JSON")->required();
  add_grid(mixture, grid);
  mixture->add_option("--tol", tol, "rate-sign tolerance")->check(CLI::PositiveNumber);
  mixture->add_option("--out", out, "output file");

  auto* suite = app.add_subcommand("acceptance", "run the acceptance suite");
  suite->alias("paper");
  suite->add_option("--filter", filter, "comma-separated criterion names or ids");
  suite->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  auto* suite_tol = suite->add_option("--tol", tol, "override every agreement tolerance")->check(CLI::PositiveNumber);
  suite->add_option("--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (sub->parsed()) {
      if (k_opt->count() && k < 1) throw weyl::InvalidArgument("--k must be >= 1");
      emit(subgroup_listing(d, k_opt->count() ? k : 0, json), out);
    } else if (rates->parsed()) {
      const auto ds = weyl::io::dynamic_spec_from_json(weyl::io::load_json_argument(spec));
      const auto times = grid.times();
      weyl::require_invertible_on_grid(ds.dynamics, times);
      emit(weyl::io::rates_csv(weyl::kernels::dft_rates_on_grid(ds.dynamics, times)), out);
    } else if (classify->parsed()) {
      const auto ds = weyl::io::dynamic_spec_from_json(weyl::io::load_json_argument(spec));
      const auto times = grid.times();
      weyl::require_invertible_on_grid(ds.dynamics, times);
      emit(pretty(weyl::io::to_json(weyl::enm_on_grid(dft_source(ds.dynamics), times, tol))), out);
    } else if (mixture->parsed()) {
      const auto mix = weyl::io::mixture_from_json(weyl::io::load_json_argument(spec));
      const auto times = grid.times();
      weyl::require_invertible_on_grid(mix.dynamics(), times);
      emit(mixture_report(mix, times, tol), out);
    } else if (suite->parsed()) {
      weyl::acceptance::Options opts;
      opts.filter = filter;
      opts.seed = seed;
      if (suite_tol->count()) opts.tolerance = tol;
      std::ostringstream os;
      bool ok = true;
      int ran = 0;
      for (const auto& r : weyl::acceptance::run(opts)) {
        os << weyl::acceptance::format(r) << "\n";
        ok = ok && r.passed;
        ++ran;
      }
      if (ran == 0) throw weyl::InvalidArgument("no criterion matches filter \"" + filter + "\"");
      emit(os.str(), out);
      return ok ? kOk : kAcceptanceFailure;
    }
  } catch (const weyl::NoninvertibleError& e) {
    std::cerr << "noninvertible: v=(" << e.i() << "," << e.j() << ") t=" << e.t() << ": " << e.what() << "\n";
    return kNoninvertible;
  } catch (const weyl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed spec: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
