#include "flatspec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "flatspec/errors.hpp"
#include "flatspec/genus2.hpp"
#include "flatspec/highgenus.hpp"
#include "flatspec/identities.hpp"
#include "flatspec/pairings.hpp"
#include "flatspec/rational.hpp"
#include "flatspec/special.hpp"
#include "flatspec/text_io.hpp"
#include "flatspec/torus.hpp"

namespace flatspec::cli {

namespace {

using text_io::format_complex;
using text_io::format_int_list;
using text_io::format_real;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SubcommandSpec {
  const char* name;
  Subcommand kind;
  const char* description;
  const char* positional;  // nullptr when the subcommand takes no file
  std::vector<std::pair<const char*, const char*>> flags;
};

const std::vector<SubcommandSpec>& subcommand_specs() {
  static const std::vector<SubcommandSpec> specs = {
      {"validate", Subcommand::Validate, "Validate a period-matrix file", "matrix", {}},
      {"torus", Subcommand::Torus, "Genus-one spectrum table", nullptr,
       {{"tau", "modulus a+bi"}, {"max", "max |n|, |m| (default 2)"}}},
      {"torus-fd", Subcommand::TorusFd, "Finite-difference eigen-residual at N and 2N", nullptr,
       {{"tau", "modulus a+bi"}, {"n", "charge n"}, {"m", "charge m"}, {"N", "grid size (default 64)"}}},
      {"search", Subcommand::Search, "Lattice search for special solutions", "matrix",
       {{"base", "base charge n1,..,nh;m1,..,mh"}}},
      {"construct-g2", Subcommand::ConstructG2, "Build a special genus-2 period matrix", nullptr,
       {{"omega11", "a+bi"},
        {"omega12", "a+bi"},
        {"M", "rational p/q"},
        {"N2", "rational p/q"},
        {"N3", "rational p/q"},
        {"N4", "positive integer (default 1)"},
        {"out", "matrix output path; parameters go to <out>.params"}}},
      {"cm-check", Subcommand::CmCheck, "Torus-cover witness and wedge checks", "matrix",
       {{"base", "base charge"}, {"probe", "single probe charge (default: all search records)"}}},
      {"psf-check", Subcommand::PsfCheck, "Poisson-summation identity", "matrix",
       {{"base", "base charge"}, {"probe", "probe charge"}, {"j", "component 1..h (default 1)"},
        {"trunc", "truncation T (default 30)"}}},
      {"report", Subcommand::Report, "Randomized identity suite on one matrix", "matrix",
       {{"cases", "random charge pairs (default 50)"}, {"seed", "RNG seed (default 1)"}}},
      {"ansatz", Subcommand::Ansatz, "Verify rational ansatz tensors", "tensors", {}},
  };
  return specs;
}

std::optional<std::string> flag(const RunConfig& c, const std::string& key) {
  const auto it = c.flags.find(key);
  if (it == c.flags.end()) return std::nullopt;
  return it->second;
}

std::string required(const RunConfig& c, const std::string& key) {
  auto v = flag(c, key);
  if (!v) throw ConfigError("missing required flag --" + key);
  return *v;
}

long long to_integer(const std::string& key, const std::string& text) {
  static const std::regex kInt(R"([+-]?[0-9]+)");
  if (!std::regex_match(text, kInt)) throw ConfigError("--" + key + " expects an integer, got '" + text + "'");
  return std::stoll(text);
}

long long integer_flag(const RunConfig& c, const std::string& key, long long fallback) {
  const auto v = flag(c, key);
  return v ? to_integer(key, *v) : fallback;
}

cplx complex_flag(const RunConfig& c, const std::string& key) {
  const std::string text = required(c, key);
  try {
    return text_io::parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--" + key + ": " + e.what());
  }
}

LatticeCharge charge_flag(const RunConfig& c, const std::string& key, int genus) {
  const std::string text = required(c, key);
  LatticeCharge out;
  try {
    out = text_io::parse_charge(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--" + key + ": " + e.what());
  }
  if (out.genus() != genus) {
    throw ConfigError("--" + key + " has genus " + std::to_string(out.genus()) + ", matrix has " +
                      std::to_string(genus));
  }
  return out;
}

Rational rational_flag(const RunConfig& c, const std::string& key) {
  const std::string text = required(c, key);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--" + key + ": " + e.what());
  }
}

std::string charge_text(const LatticeCharge& c) { return format_int_list(c.n) + ";" + format_int_list(c.m); }

int cmd_validate(const RunConfig& c, std::ostream& out) {
  const PeriodMatrix omega = text_io::parse_matrix_file(c.matrix_path);
  out << "valid genus " << omega.genus() << " min_eig_im " << format_real(omega.imag_eigenvalues().minCoeff())
      << "\n";
  return kExitOk;
}

int cmd_torus(const RunConfig& c, std::ostream& out) {
  const cplx tau = complex_flag(c, "tau");
  const long long max = integer_flag(c, "max", 2);
  if (max < 0) throw ConfigError("--max must be >= 0");
  out << "# n m Re(c) Im(c) lambda mu\n";
  for (const auto& e : torus::spectrum_table(tau, max)) {
    out << e.n << ' ' << e.m << ' ' << format_real(e.c.real()) << ' ' << format_real(e.c.imag()) << ' '
        << format_real(e.lambda) << ' ' << format_real(e.mu) << '\n';
  }
  return kExitOk;
}

int cmd_torus_fd(const RunConfig& c, std::ostream& out) {
  const cplx tau = complex_flag(c, "tau");
  const long long n = to_integer("n", required(c, "n"));
  const long long m = to_integer("m", required(c, "m"));
  const long long N = integer_flag(c, "N", 64);
  if (N < 16 || N > (1 << 14)) throw ConfigError("--N must lie in [16, 16384]");
  const unsigned threads = resolve_threads(c);
  const auto coarse = torus::fd_eigen_residual(tau, n, m, static_cast<int>(N), threads);
  const auto fine = torus::fd_eigen_residual(tau, n, m, static_cast<int>(2 * N), threads);
  out << "# N lambda relative_residual\n";
  out << N << ' ' << format_real(coarse.lambda_analytic) << ' ' << format_real(coarse.relative_residual) << '\n';
  out << 2 * N << ' ' << format_real(fine.lambda_analytic) << ' ' << format_real(fine.relative_residual) << '\n';
  return kExitOk;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  const PeriodMatrix omega = text_io::parse_matrix_file(c.matrix_path);
  const LatticeCharge base = charge_flag(c, "base", omega.genus());
  const auto records = special::search_solutions(omega, base, c.bound, c.tol, resolve_threads(c));
  out << "# n' m' Re(c) Im(c) lambda_c degree classification\n";
  for (const auto& r : records) {
    out << format_int_list(r.probe.n) << ' ' << format_int_list(r.probe.m) << ' ' << format_real(r.c.real())
        << ' ' << format_real(r.c.imag()) << ' ' << format_real(r.lambda_c) << ' '
        << (r.degree ? std::to_string(*r.degree) : std::string("-")) << ' ' << special::to_string(r.classification)
        << '\n';
  }
  return kExitOk;
}

int cmd_construct_g2(const RunConfig& c, std::ostream& out) {
  genus2::Genus2Params p;
  p.omega11 = complex_flag(c, "omega11");
  p.omega12 = complex_flag(c, "omega12");
  p.M = rational_flag(c, "M");
  p.N2 = rational_flag(c, "N2");
  p.N3 = rational_flag(c, "N3");
  p.N4hat = integer_flag(c, "N4", 1);
  const genus2::SpecialGenus2 s = genus2::build_special_genus2(p);

  std::ostringstream params;
  params << "N1 " << to_string(s.N1) << "\nN2 " << to_string(p.N2) << "\nN3 " << to_string(p.N3) << "\nN4 "
         << p.N4hat << "\nN+ " << to_string(s.N_plus) << "\nN- " << to_string(s.N_minus) << '\n';
  for (const auto branch : {genus2::Branch::Plus, genus2::Branch::Minus}) {
    const char* label = branch == genus2::Branch::Plus ? "gamma+" : "gamma-";
    const auto [g0, g1] = genus2::gamma_basis(p, branch);
    for (const auto& g : {g0, g1}) {
      params << label << ' ' << g.first << ' ' << g.second << ' '
             << charge_text(genus2::gamma_complete(p, branch, g.first, g.second)) << '\n';
    }
  }

  const std::string matrix = text_io::format_matrix(s.omega);
  if (const auto path = flag(c, "out")) {
    std::ofstream mf(*path);
    std::ofstream pf(*path + ".params");
    if (!mf || !pf) throw ConfigError("cannot write " + *path);
    mf << matrix;
    pf << params.str();
    out << "wrote " << *path << " and " << *path << ".params\n";
  } else {
    out << matrix << params.str();
  }
  return kExitOk;
}

int cmd_cm_check(const RunConfig& c, std::ostream& out) {
  const PeriodMatrix omega = text_io::parse_matrix_file(c.matrix_path);
  const LatticeCharge base = charge_flag(c, "base", omega.genus());
  std::vector<special::SolutionRecord> records;
  if (flag(c, "probe")) {
    records.push_back(special::make_record(omega, base, charge_flag(c, "probe", omega.genus()), c.tol, c.bound));
  } else {
    records = special::search_solutions(omega, base, c.bound, c.tol, resolve_threads(c));
  }
  const double vmax = special::charge_vector(omega, base).cwiseAbs().maxCoeff();
  bool ok = true;
  out << "# n' m' Re(tau) Im(tau) wedge_residual relation_residual status\n";
  for (const auto& r : records) {
    if (r.classification != special::Classification::SpecialComplex) continue;
    const double vpmax = special::charge_vector(omega, r.probe).cwiseAbs().maxCoeff();
    const double wedge = special::cm_wedge_residual(omega, base, r.probe);
    const auto w = special::witness_from_record(base, r);
    const double rel = special::cm_relation_check(omega, r.cbar(), w.M, w.N, w.Mprime, w.Nprime);
    const bool pass = wedge <= c.tol * vmax * vpmax && rel <= c.tol * std::max(1.0, vmax);
    ok = ok && pass;
    out << format_int_list(r.probe.n) << ' ' << format_int_list(r.probe.m) << ' ' << format_real(r.cbar().real())
        << ' ' << format_real(r.cbar().imag()) << ' ' << format_real(wedge) << ' ' << format_real(rel) << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitValidation;
}

int cmd_psf_check(const RunConfig& c, std::ostream& out) {
  const PeriodMatrix omega = text_io::parse_matrix_file(c.matrix_path);
  const LatticeCharge base = charge_flag(c, "base", omega.genus());
  const LatticeCharge probe = charge_flag(c, "probe", omega.genus());
  const long long j = integer_flag(c, "j", 1);
  const long long trunc = integer_flag(c, "trunc", 30);
  if (j < 1 || j > omega.genus()) throw ConfigError("--j must lie in 1.." + std::to_string(omega.genus()));
  if (trunc < 0 || trunc > 100000) throw ConfigError("--trunc must lie in [0, 100000]");
  const auto r = special::psf_check(omega, base, probe, static_cast<int>(j - 1), static_cast<int>(trunc));
  const bool pass = r.residual <= c.tol;
  out << "# D D' lhs rhs residual status\n"
      << format_complex(r.d) << ' ' << format_complex(r.d_prime) << ' ' << format_complex(r.lhs) << ' '
      << format_complex(r.rhs) << ' ' << format_real(r.residual) << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitValidation;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const PeriodMatrix omega = text_io::parse_matrix_file(c.matrix_path);
  const long long cases = integer_flag(c, "cases", 50);
  const long long seed = integer_flag(c, "seed", 1);
  if (cases < 1) throw ConfigError("--cases must be >= 1");
  const int h = omega.genus();

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  const auto draw = [&] {
    IVector v(h);
    for (int k = 0; k < h; ++k) v(k) = static_cast<std::int64_t>(rng() % 11) - 5;
    return v;
  };

  using ChargeId = std::function<double(const LatticeCharge&, const LatticeCharge&)>;
  namespace id = identities;
  const auto cyc = [](const LatticeCharge& x) { return as_cycle(x); };
  const std::vector<std::pair<const char*, ChargeId>> checks = {
      {"conjugation", [&](auto& a, auto& b) { return id::conjugation(omega, a, cyc(b)); }},
      {"herm_im_swap", [&](auto& a, auto& b) { return id::herm_im_swap(omega, a, cyc(b)); }},
      {"factorization", [&](auto& a, auto& b) { return id::factorization(omega, a, cyc(b)); }},
      {"herm_vs_period", [&](auto& a, auto& b) { return id::herm_vs_period(omega, a, cyc(b)); }},
      {"real_vs_herm_real_part", [&](auto& a, auto& b) { return id::real_vs_herm_real_part(omega, a, cyc(b)); }},
      {"real_symmetry", [&](auto& a, auto& b) { return id::real_symmetry(omega, a, cyc(b)); }},
      {"real_vs_herm", [&](auto& a, auto& b) { return id::real_vs_herm(omega, a, cyc(b)); }},
      {"norm_is_herm", [&](auto& a, auto&) { return id::norm_is_herm(omega, a); }},
      {"ab_expression", [&](auto& a, auto& b) { return id::ab_expression(omega, a, cyc(b)); }},
      {"alpha_periods", [&](auto& a, auto&) { return id::alpha_periods(omega, a); }},
      {"d_matrix_contraction", [&](auto& a, auto&) { return id::d_matrix_contraction(omega, a); }},
      {"monodromy_quantization", [&](auto& a, auto& b) { return id::monodromy_quantization(omega, a, cyc(b)); }},
      {"wedge_vs_herm", [&](auto& a, auto& b) { return id::wedge_vs_herm(omega, a, b); }},
      {"wedge_defect", [&](auto& a, auto& b) { return id::wedge_defect(omega, a, b); }},
      {"wedge_im_swap", [&](auto& a, auto& b) { return id::wedge_im_swap(omega, a, b); }},
      {"eta_decomposition", [&](auto& a, auto&) { return id::eta_decomposition(omega, a); }},
      {"eta_periods", [&](auto&, auto&) { return id::eta_periods(omega); }},
      {"eta_row_identity", [&](auto&, auto&) { return id::eta_row_identity(omega); }},
      {"winding_area", [&](auto& a, auto&) { return a.degenerate() ? 0.0 : id::winding_area(omega, a); }},
      {"area_routes", [&](auto& a, auto&) { return a.degenerate() ? 0.0 : id::area_routes(omega, a); }},
      {"duality_canonical", [&](auto& a, auto&) { return id::duality_canonical(omega, a); }},
  };

  std::vector<double> worst(checks.size(), 0.0);
  for (long long t = 0; t < cases; ++t) {
    const LatticeCharge a{draw(), draw()};
    const LatticeCharge b{draw(), draw()};
    for (std::size_t k = 0; k < checks.size(); ++k) worst[k] = std::max(worst[k], checks[k].second(a, b));
  }
  bool ok = true;
  out << "# identity max_residual status\n";
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const bool pass = worst[k] <= c.tol;
    ok = ok && pass;
    out << checks[k].first << ' ' << format_real(worst[k]) << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitValidation;
}

int cmd_ansatz(const RunConfig& c, std::ostream& out) {
  const auto t = text_io::parse_tensor_file(c.matrix_path);
  const auto r = highgenus::verify_ansatz_tensors(t);
  const bool ok = r.cocycle == 0 && r.m_term == 0;
  out << "# identity max_residual status\n"
      << "composition " << to_string(r.cocycle) << ' ' << (r.cocycle == 0 ? "PASS" : "FAIL") << '\n'
      << "m_contraction " << to_string(r.m_term) << ' ' << (r.m_term == 0 ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitValidation;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.subcommand) {
    case Subcommand::Validate: return cmd_validate(c, out);
    case Subcommand::Torus: return cmd_torus(c, out);
    case Subcommand::TorusFd: return cmd_torus_fd(c, out);
    case Subcommand::Search: return cmd_search(c, out);
    case Subcommand::ConstructG2: return cmd_construct_g2(c, out);
    case Subcommand::CmCheck: return cmd_cm_check(c, out);
    case Subcommand::PsfCheck: return cmd_psf_check(c, out);
    case Subcommand::Report: return cmd_report(c, out);
    case Subcommand::Ansatz: return cmd_ansatz(c, out);
  }
  throw ConfigError("unknown subcommand");
}

}  // namespace

unsigned resolve_threads(const RunConfig& config) {
  if (config.threads) return std::max(1u, *config.threads);
  if (const char* env = std::getenv("THREADS")) {
    static const std::regex kPositive(R"([0-9]+)");
    if (std::regex_match(env, kPositive)) {
      const unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ParsedArgs parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive-differential algebra and special period matrices"};
  app.require_subcommand(1);
  RunConfig config;
  long long threads = 0;
  app.add_option("--tol", config.tol, "acceptance tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", config.bound, "search box half-width (default 2)")->check(CLI::Range(1LL, 1000LL));
  app.add_option("--threads", threads, "worker count (default: THREADS, then hardware)")
      ->check(CLI::Range(1LL, 4096LL));

  std::map<std::string, std::map<std::string, std::string>> storage;
  std::map<std::string, std::string> positional;
  for (const auto& entry : subcommand_specs()) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.description);
    sub->fallthrough();
    if (entry.positional) sub->add_option(entry.positional, positional[entry.name], "input file")->required();
    for (const auto& [key, desc] : entry.flags) {
      sub->add_option(std::string("--") + key, storage[entry.name][key], desc);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitConfig};
  }

  for (const auto& entry : subcommand_specs()) {
    CLI::App* sub = app.get_subcommand(entry.name);
    if (!sub->parsed()) continue;
    config.subcommand = entry.kind;
    if (entry.positional) config.matrix_path = positional[entry.name];
    for (const auto& [key, desc] : entry.flags) {
      if (sub->count(std::string("--") + key) > 0) config.flags[key] = storage[entry.name][key];
    }
  }
  if (app.count("--threads") > 0) config.threads = static_cast<unsigned>(threads);
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.tol > 0.0)) throw ConfigError("tol must be > 0");
    if (config.bound < 1) throw ConfigError("bound must be >= 1");
    return dispatch(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace flatspec::cli
