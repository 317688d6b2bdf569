#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anharmonic/contfrac.hpp"
#include "anharmonic/continuum.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/ggy.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/oracles.hpp"
#include "anharmonic/recurrence.hpp"
#include "anharmonic/remainders.hpp"
#include "anharmonic/slicing.hpp"
#include "anharmonic/validation.hpp"

namespace {

using anharmonic::ModelParams;
using anharmonic::SliceGrid;
using QuadFloat = boost::multiprecision::cpp_bin_float_quad;

constexpr int kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitIo = 3;

struct Options {
  double a = 0.1, b = 1.0, c = 1.0, beta = 1.0;
  int n_slices = 64;
  int k0 = -1;  // default: ceil(4 log2 N)
  int j_order = 2;
  int order = 3;
  double h = 0.0;  // default: beta / 4096
  std::uint64_t seed = 1;
  std::string out;
  std::string precision = "standard";
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int default_k0(const Options& o) {
  if (o.k0 >= 0) return o.k0;
  return static_cast<int>(std::ceil(4.0 * std::log2(std::max(2, o.n_slices))));
}

/// Single-index lattice series sum_{mu<=J} (-1)^mu/(mu! (2z^2)^mu) (N)_0^{2mu},
/// evaluated in the scalar type of the numeric-policy switch.
template <class T>
double lattice_series(const SliceGrid& grid, int J) {
  std::vector<T> omega = anharmonic::contfrac::omega_sequence<T>(
      T(grid.A) * T(grid.A), T(grid.B), grid.N - 1);
  anharmonic::recurrence::LambdaTableT<T> table(omega, T(grid.A) * T(grid.A),
                                                grid.N, J);
  T inv2z2 = T(1) / (T(2) * T(grid.z) * T(grid.z));
  T sum(0), coeff(1);
  for (int mu = 0; mu <= J; ++mu) {
    if (mu > 0) coeff = coeff * (-inv2z2) / T(mu);
    sum += coeff * table.at(grid.N, mu, 0);
  }
  return static_cast<double>(sum);
}

int cmd_z(const Options& o) {
  ModelParams p(o.a, o.b, o.c, o.beta);
  double z_closed = anharmonic::ggy::z_beta(p, o.order, anharmonic::ggy::Method::closed_form);
  double z_direct = anharmonic::ggy::z_beta(p, o.order, anharmonic::ggy::Method::direct_ode);
  std::printf("z_closed_form=%s\n", num(z_closed).c_str());
  std::printf("z_direct_ode=%s\n", num(z_direct).c_str());

  anharmonic::continuum::ContinuumSeries series(p, o.beta, o.order);
  double ac2 = p.a / (p.c * p.c), coeff = 1.0;
  for (int mu = 0; mu <= o.order; ++mu) {
    if (mu > 0) coeff *= -ac2 / mu;
    std::printf("s_term mu=%d value=%s provenance=%s\n", mu,
                num(coeff * series.c_term(mu, o.beta)).c_str(),
                series.provenance(mu).c_str());
  }
  std::printf("s_beta=%s\n", num(series.s(o.beta)).c_str());

  if (p.a > 0.0) {
    SliceGrid grid = anharmonic::build_grid(p, o.n_slices);
    anharmonic::remainders::RemainderBudget b =
        anharmonic::remainders::budget(grid, default_k0(o), o.j_order, 2);
    std::printf(
        "budget N=%d K0=%d J=%d poincare=%s tail=%s difference=%s total=%s\n",
        b.N, b.K0, b.J, num(b.poincare_piece).c_str(), num(b.tail_piece).c_str(),
        num(b.difference_piece).c_str(), num(b.total).c_str());
    double s_lat = (o.precision == "extended")
                       ? lattice_series<QuadFloat>(grid, o.j_order)
                       : lattice_series<double>(grid, o.j_order);
    double z_lat = anharmonic::oracles::zn_gaussian(p, o.n_slices) * s_lat;
    std::printf("z_lattice=%s precision=%s\n", num(z_lat).c_str(),
                o.precision.c_str());
  }
  return kExitOk;
}

int cmd_figure(const Options& o, int which) {
  std::string path = o.out.empty()
                         ? (which == 1 ? "figure1.csv" : "figure2.csv")
                         : o.out;
  std::string body = "x,value\n";
  if (which == 1) {
    double c = 0.5, a = 0.1, tau = 1.0;
    for (int i = 0; i < 200; ++i) {
      double b = 10.0 * i / 199.0;
      ModelParams p(a, b, c, tau);
      body += num(b) + "," +
              num(anharmonic::continuum::s_continuum(p, tau, 3)) + "\n";
    }
  } else {
    double a = 0.1, b = 5.0, c = 0.5;
    double tau_lo = 0.01, tau_hi = 2.0;
    ModelParams p(a, b, c, tau_hi);
    anharmonic::continuum::ContinuumSeries series(p, tau_hi, 3);
    for (int i = 0; i < 200; ++i) {
      double tau = tau_lo + (tau_hi - tau_lo) * i / 199.0;
      double s = series.s(tau), d1 = series.s_d1(tau), d2 = series.s_d2(tau);
      if (!(s > 0.0)) throw anharmonic::DomainError("figure 2: S(tau) not positive");
      double r = d1 / s;
      body += num(tau) + "," + num(-2.0 * d2 / s - 2.0 * r * r) + "\n";
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << body) || !f.flush()) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return kExitIo;
  }
  std::printf("wrote %s\n", path.c_str());
  return kExitOk;
}

int cmd_validate(const std::string& suite, bool inject_failure) {
  std::vector<anharmonic::validation::CheckResult> results =
      anharmonic::validation::run_suite(suite == "quick", inject_failure);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("[%s] criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
  }
  return all ? kExitOk : kExitDomain;
}

int cmd_oracle(const Options& o, const std::string& which, long long samples) {
  ModelParams p(o.a, o.b, o.c, o.beta);
  if (which == "gaussian") {
    std::printf("zn_gaussian=%s\n", num(anharmonic::oracles::zn_gaussian(p, o.n_slices)).c_str());
  } else if (which == "bruteforce") {
    auto r = anharmonic::oracles::zn_bruteforce(p, o.n_slices);
    std::printf("zn_bruteforce=%s error=%s cost=%lld\n", num(r.value).c_str(),
                num(r.error_estimate).c_str(), r.cost);
  } else if (which == "multisum") {
    SliceGrid grid = anharmonic::build_grid(p, o.n_slices);
    std::printf("zn_multisum=%s\n",
                num(anharmonic::slicing::zn_multisum(grid, default_k0(o))).c_str());
  } else if (which == "coupling") {
    std::printf("coupling_derivative=%s\n",
                num(anharmonic::oracles::coupling_derivative(p, o.n_slices)).c_str());
  } else if (which == "montecarlo") {
    auto r = anharmonic::oracles::zn_montecarlo(p, o.n_slices, samples, o.seed);
    std::printf("zn_montecarlo=%s stderr=%s cost=%lld\n", num(r.value).c_str(),
                num(r.error_estimate).c_str(), r.cost);
  } else {
    std::fprintf(stderr, "error: unknown oracle '%s'\n", which.c_str());
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anharmonic oscillator partition function toolkit"};
  app.require_subcommand(1);

  Options o;
  auto add_model_flags = [&o](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");  // frees -h for the ODE step
    cmd->add_option("--a", o.a, "quartic coupling (>= 0)");
    cmd->add_option("--b", o.b, "quadratic coefficient");
    cmd->add_option("--c", o.c, "kinetic coefficient (> 0)");
    cmd->add_option("--beta", o.beta, "upper time bound (> 0)");
    cmd->add_option("--n-slices", o.n_slices, "slice count N");
    cmd->add_option("--k0", o.k0, "multi-index cutoff (default 4 log2 N)");
    cmd->add_option("--j-order", o.j_order, "expansion order J");
    cmd->add_option("--order", o.order, "continuum series order (0..3)");
    cmd->add_option("--h", o.h, "ODE step (default beta/4096)");
    cmd->add_option("--seed", o.seed, "RNG stream seed");
    cmd->add_option("--out", o.out, "output path");
    cmd->add_option("--precision", o.precision, "numeric policy: standard|extended")
        ->check(CLI::IsMember({"standard", "extended"}));
  };

  CLI::App* z = app.add_subcommand("z", "compute Z(beta) and the S series");
  add_model_flags(z);

  int fig_which = 1;
  CLI::App* figure = app.add_subcommand("figure", "emit figure data as CSV");
  figure->add_option("which", fig_which, "figure number")->check(CLI::Range(1, 2));
  add_model_flags(figure);

  std::string suite = "quick";
  bool inject_failure = false;
  CLI::App* validate = app.add_subcommand("validate", "run the acceptance suite");
  validate->add_option("--suite", suite, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  validate->add_flag("--inject-failure", inject_failure)->group("");

  std::string oracle_which = "gaussian";
  long long samples = 100000;
  CLI::App* oracle = app.add_subcommand("oracle", "run a reference oracle");
  oracle->add_option("which", oracle_which,
                     "gaussian|bruteforce|multisum|coupling|montecarlo");
  oracle->add_option("--samples", samples, "Monte Carlo sample count");
  add_model_flags(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (z->parsed()) return cmd_z(o);
    if (figure->parsed()) return cmd_figure(o, fig_which);
    if (validate->parsed()) return cmd_validate(suite, inject_failure);
    if (oracle->parsed()) return cmd_oracle(o, oracle_which, samples);
  } catch (const anharmonic::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}
