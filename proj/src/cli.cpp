#include "trisqueeze/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "trisqueeze/fock_oracle.hpp"
#include "trisqueeze/io.hpp"
#include "trisqueeze/quasiprob.hpp"

namespace trisqueeze::cli {

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

double parse_double(std::string_view text, const std::string& what) {
  double v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw UsageError(fmt::format("cannot read '{}' as a number in {}", text, what));
  }
  return v;
}

int parse_int(std::string_view text, const std::string& what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw UsageError(fmt::format("cannot read '{}' as an integer in {}", text, what));
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// Evaluates fn(i) for i in [0, count) on a few threads; results keep input order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // Report the first failing row, independent of scheduling.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct ParamOptions {
  std::string r, r1, r2, r3;

  void add(CLI::App* app) {
    app->add_option("--r", r, "symmetric squeezing r1 = r2 = r3 (value or start:stop:count)");
    app->add_option("--r1", r1, "coupling of modes 1 and 2");
    app->add_option("--r2", r2, "coupling of modes 1 and 3");
    app->add_option("--r3", r3, "coupling of modes 2 and 3");
  }

  std::vector<Params> expand() const {
    const bool any_single = !r1.empty() || !r2.empty() || !r3.empty();
    if (!r.empty() && any_single) throw UsageError("give either --r or --r1/--r2/--r3, not both");
    if (!r.empty()) {
      std::vector<Params> out;
      for (double v : parse_sweep(r)) out.push_back(Params::symmetric(v));
      return out;
    }
    if (r1.empty() || r2.empty() || r3.empty()) {
      throw UsageError("squeezing parameters need --r or all of --r1, --r2 and --r3");
    }
    std::vector<Params> out;
    for (double a : parse_sweep(r1))
      for (double b : parse_sweep(r2))
        for (double c : parse_sweep(r3)) out.push_back({a, b, c});
    return out;
  }

  Params single() const {
    const auto all = expand();
    if (all.size() != 1) throw UsageError("this command takes a single parameter triple, not a sweep");
    return all.front();
  }
};

struct OutputOptions {
  std::string path;

  void add(CLI::App* app) { app->add_option("-o,--output", path, "output file (default: standard output)"); }

  // TRISQUEEZE_OUTPUT_DIR relocates named output files into that directory.
  static std::filesystem::path resolve(const std::string& p) {
    const char* dir = std::getenv("TRISQUEEZE_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return p;
    return std::filesystem::path(dir) / std::filesystem::path(p).filename();
  }

  void emit(std::ostream& out, const std::string& text) const { write_to(path, out, text); }

  static void write_to(const std::string& p, std::ostream& out, const std::string& text) {
    if (p.empty()) {
      out << text;
      return;
    }
    const auto target = resolve(p);
    std::ofstream file(target, std::ios::binary);
    if (!file) throw Error(fmt::format("cannot open '{}' for writing", target.string()));
    file << text;
    if (!file) throw Error(fmt::format("failed writing '{}'", target.string()));
  }
};

InputState state_or_default(const std::string& text) { return text.empty() ? InputState::vacuum() : parse_state(text); }

std::array<int, 3> number_state(const InputState& state, const char* command) {
  const auto n = state.occupations();
  if (!n) throw UsageError(fmt::format("{} needs a number-state input n=n1,n2,n3", command));
  return *n;
}

Ordering ordering_arg(int s) {
  if (s < -1 || s > 1) throw UsageError(fmt::format("--s must be -1, 0 or 1, got {}", s));
  return ordering_from_int(s);
}

std::string dump(const json& doc) {
  std::ostringstream os;
  io::write_json(os, doc);
  return os.str();
}

// coeffs -------------------------------------------------------------------

std::string cmd_coeffs(const ParamOptions& p) {
  const Params params = p.single();
  json doc;
  doc["params"] = io::to_json(params);
  const json table = io::to_json(bogoliubov_coeffs(params));
  for (const auto& [k, v] : table.items()) doc[k] = v;
  return dump(doc);
}

// squeeze-sweep ------------------------------------------------------------

std::string cmd_squeeze(const ParamOptions& p, int c1, int c2, const std::string& state_text) {
  const auto params = p.expand();
  const InputState state = state_or_default(state_text);
  const QuadratureSelector sel(c1, c2);
  const auto rows = parallel_map<Squeezing>(
      params.size(), [&](std::size_t i) { return squeezing(bogoliubov_coeffs(params[i]), sel, state); });
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"r1", "r2", "r3", "c1", "c2", "Sx", "Sy"});
  for (std::size_t i = 0; i < params.size(); ++i) {
    csv.row({params[i].r1, params[i].r2, params[i].r3, double(c1), double(c2), rows[i].sx, rows[i].sy});
  }
  return os.str();
}

// g2-sweep -----------------------------------------------------------------

std::string cmd_g2(const ParamOptions& p, int mode, const std::string& state_text) {
  const auto params = p.expand();
  const InputState state = state_or_default(state_text);
  const auto n = number_state(state, "g2-sweep");
  if (mode < 1 || mode > 3) throw UsageError(fmt::format("--mode must be 1, 2 or 3, got {}", mode));
  const auto rows = parallel_map<double>(
      params.size(), [&](std::size_t i) { return g2(bogoliubov_coeffs(params[i]), state, mode); });
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"r1", "r2", "r3", "n1", "n2", "n3", "g2_mode"});
  for (std::size_t i = 0; i < params.size(); ++i) {
    csv.row({params[i].r1, params[i].r2, params[i].r3, double(n[0]), double(n[1]), double(n[2]), rows[i]});
  }
  return os.str();
}

// cs-sweep -----------------------------------------------------------------

std::string cmd_cs(const ParamOptions& p, int j, int k, const std::string& state_text) {
  const auto params = p.expand();
  const InputState state = state_or_default(state_text);
  if (j < 1 || j > 3 || k < 1 || k > 3 || j == k) {
    throw UsageError(fmt::format("--j and --k must be distinct modes in 1..3, got {} and {}", j, k));
  }
  const auto rows = parallel_map<double>(
      params.size(), [&](std::size_t i) { return cauchy_schwarz(bogoliubov_coeffs(params[i]), state, j, k); });
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"r1", "r2", "r3", "j", "k", "V"});
  for (std::size_t i = 0; i < params.size(); ++i) {
    csv.row({params[i].r1, params[i].r2, params[i].r3, double(j), double(k), rows[i]});
  }
  return os.str();
}

// wigner-grid --------------------------------------------------------------

struct GridOptions {
  std::optional<double> x_min, x_max, y_min, y_max;
  int nx = 101;
  int ny = 101;
  int s = 0;
  std::string method = "auto";
  std::string format = "csv";
  std::string aux_path;
  std::string state;

  void add(CLI::App* app) {
    app->add_option("--x-min", x_min);
    app->add_option("--x-max", x_max);
    app->add_option("--y-min", y_min);
    app->add_option("--y-max", y_max);
    app->add_option("--nx", nx, "points along x")->capture_default_str();
    app->add_option("--ny", ny, "points along y")->capture_default_str();
    app->add_option("--s", s, "ordering: -1 Husimi, 0 Wigner, 1 Glauber-Sudarshan")->capture_default_str();
    app->add_option("--method", method, "auto, closed or numeric")
        ->check(CLI::IsMember({"auto", "closed", "numeric"}))
        ->capture_default_str();
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--aux", aux_path, "JSON sidecar path (default: <output>.aux.json when --output is given)");
    app->add_option("--state", state, "input state n=n1,n2,n3")->capture_default_str();
  }
};

GridSpec grid_from(const GridOptions& g, const Coeffs& coeffs, const Occupations& n, Ordering s) {
  const bool any = g.x_min || g.x_max || g.y_min || g.y_max;
  GridSpec grid;
  if (!any) {
    // Antinormal and symmetric windows are both wide enough; a P window falls back to the Wigner one.
    grid = GridSpec::automatic(coeffs, n, s == Ordering::Normal ? Ordering::Symmetric : s, g.nx, g.ny);
  } else {
    if (!(g.x_min && g.x_max && g.y_min && g.y_max)) {
      throw UsageError("give all of --x-min, --x-max, --y-min, --y-max or none of them");
    }
    grid = GridSpec{*g.x_min, *g.x_max, g.nx, *g.y_min, *g.y_max, g.ny};
  }
  try {
    grid.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return grid;
}

void cmd_wigner(const ParamOptions& p, const GridOptions& g, const OutputOptions& output, std::ostream& out) {
  const Params params = p.single();
  const Coeffs coeffs = bogoliubov_coeffs(params);
  const InputState state = state_or_default(g.state);
  const Occupations n = number_state(state, "wigner-grid");
  const Ordering s = ordering_arg(g.s);
  const GridSpec grid = grid_from(g, coeffs, n, s);

  std::string method = g.method;
  if (method == "auto") method = has_closed_form(n) ? "closed" : "numeric";
  const QuasiprobGrid result =
      method == "closed" ? wigner_closed_grid(coeffs, n, grid, s) : wigner_numeric(coeffs, n, grid, s);

  const ExcitedSlot slot = n[0] > 0 ? ExcitedSlot::Mode1 : ExcitedSlot::Mode3;
  json aux;
  aux["params"] = io::to_json(params);
  aux["state"] = io::to_json(state);
  aux["s"] = g.s;
  aux["method"] = method;
  aux["slot"] = slot == ExcitedSlot::Mode1 ? "mode1" : "mode3";
  aux["aux"] = io::to_json(wigner_aux(coeffs, s, slot));
  aux["integral"] = result.integral();

  if (g.format == "json") {
    json doc = aux;
    doc["grid"] = io::to_json(result);
    output.emit(out, dump(doc));
    return;
  }
  std::ostringstream os;
  io::write_csv(os, result);
  output.emit(out, os.str());
  std::string aux_path = g.aux_path;
  if (aux_path.empty() && !output.path.empty()) aux_path = output.path + ".aux.json";
  if (!aux_path.empty()) OutputOptions::write_to(aux_path, out, dump(aux));
}

// origin-sweep -------------------------------------------------------------

std::string cmd_origin(const ParamOptions& p, int s_arg, const std::string& state_text) {
  const auto params = p.expand();
  const InputState state = state_or_default(state_text.empty() ? "n=0,0,1" : state_text);
  const Occupations n = number_state(state, "origin-sweep");
  if (!has_closed_form(n)) throw UsageError("origin-sweep takes inputs (0,0,n3), (n1,0,0) or the vacuum");
  const Ordering s = ordering_arg(s_arg);
  const ExcitedSlot slot = n[0] > 0 ? ExcitedSlot::Mode1 : ExcitedSlot::Mode3;
  const int excitation = std::max(n[0], n[2]);
  const auto rows = parallel_map<double>(params.size(), [&](std::size_t i) {
    const Coeffs c = bogoliubov_coeffs(params[i]);
    return excitation == 0 ? wigner_vacuum(c, {}, s) : wigner_origin(c, excitation, s, slot);
  });
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"r1", "r2", "r3", "w00"});
  for (std::size_t i = 0; i < params.size(); ++i) csv.row({params[i].r1, params[i].r2, params[i].r3, rows[i]});
  return os.str();
}

// oracle-verify ------------------------------------------------------------

constexpr double kMomentTolerance = 1e-6;
constexpr double kWignerTolerance = 1e-5;

struct Check {
  std::string name;
  double analytic;
  double oracle;
  double tolerance;
  bool absolute;
};

std::string cmd_oracle(const ParamOptions& p, const std::string& state_text, int cutoff_n) {
  const Params params = p.single();
  const InputState state = state_or_default(state_text);
  FockCutoff cutoff = [&] {
    try {
      return FockCutoff(cutoff_n);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  const Coeffs coeffs = bogoliubov_coeffs(params);
  const TruncatedState input = TruncatedState::from_input(cutoff, state);
  TruncationReport report;
  const TruncatedState out = apply_squeeze(input, params, &report);

  std::vector<Check> checks;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  const MomentTable table = moment_table(coeffs, state);
  std::array<double, 3> mean{}, pair{};
  for (int j = 1; j <= 3; ++j) {
    Monomial n1, n2;
    n1.creation[j - 1] = n1.annihilation[j - 1] = 1;
    n2.creation[j - 1] = n2.annihilation[j - 1] = 2;
    mean[j - 1] = oracle_expectation(out, n1).real();
    pair[j - 1] = oracle_expectation(out, n2).real();
    checks.push_back({fmt::format("mean_n{}", j), table.mean_n[j - 1], mean[j - 1], kMomentTolerance, false});
    if (const auto g = table.g2(j); g && mean[j - 1] > kRatioFloor) {
      const double og = pair[j - 1] / (mean[j - 1] * mean[j - 1]) - 1;
      checks.push_back({fmt::format("g2_mode{}", j), *g, og, kMomentTolerance, false});
    }
  }
  for (auto [j, k] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    Monomial c;
    c.creation[j - 1] = c.annihilation[j - 1] = 1;
    c.creation[k - 1] = c.annihilation[k - 1] = 1;
    const double cross = oracle_expectation(out, c).real();
    if (const auto v = table.cauchy_schwarz(j, k); v && cross > kRatioFloor) {
      const double ov = std::sqrt(pair[j - 1] * pair[k - 1]) / cross - 1;
      checks.push_back({fmt::format("v_{}{}", j, k), *v, ov, kMomentTolerance, false});
    }
  }
  for (auto [c1, c2] : {std::pair{0, 0}, {1, 1}}) {
    const QuadratureSelector sel(c1, c2);
    const auto [vx, vy] = quadrature_variances(coeffs, sel, state);
    const LadderPolynomial x = quadrature_x(coeffs.identity(), sel);
    const LadderPolynomial y = quadrature_y(coeffs.identity(), sel);
    const double ox = (oracle_expectation(out, x * x) - std::pow(oracle_expectation(out, x), 2)).real();
    const double oy = (oracle_expectation(out, y * y) - std::pow(oracle_expectation(out, y), 2)).real();
    checks.push_back({fmt::format("var_x_c{}{}", c1, c2), vx, ox, kMomentTolerance, false});
    checks.push_back({fmt::format("var_y_c{}{}", c1, c2), vy, oy, kMomentTolerance, false});
  }
  const auto occ = state.occupations();
  if (occ && has_closed_form(*occ)) {
    const SingleModeDensity rho = reduced_density(out, 1);
    const ExcitedSlot slot = (*occ)[0] > 0 ? ExcitedSlot::Mode1 : ExcitedSlot::Mode3;
    const int excitation = std::max((*occ)[0], (*occ)[2]);
    for (Ordering s : {Ordering::Symmetric, Ordering::Antinormal}) {
      for (cplx z : {cplx(0, 0), cplx(0.4, -0.3), cplx(-0.7, 0.5)}) {
        const double w = excitation == 0 ? wigner_vacuum(coeffs, z, s) : wigner_excited(coeffs, excitation, slot, z, s);
        checks.push_back({fmt::format("w_s{}_{}_{}", static_cast<int>(s), z.real(), z.imag()), w,
                          oracle_wigner(rho, z, s), kWignerTolerance, true});
      }
    }
  }

  json doc;
  doc["params"] = io::to_json(params);
  doc["state"] = io::to_json(state);
  doc["cutoff"] = cutoff.n();
  doc["truncation"] = io::to_json(report);
  json items = json::array();
  bool all = true;
  for (const auto& c : checks) {
    const double err = c.absolute ? std::abs(c.analytic - c.oracle) : rel(c.analytic, c.oracle);
    const bool ok = err < c.tolerance;
    all = all && ok;
    items.push_back({{"quantity", c.name},
                     {"analytic", c.analytic},
                     {"oracle", c.oracle},
                     {c.absolute ? "abs_error" : "rel_error", err},
                     {"tolerance", c.tolerance},
                     {"pass", ok}});
  }
  doc["checks"] = std::move(items);
  doc["pass"] = all;
  return dump(doc);
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_double(parts[0], "'" + text + "'")};
  if (parts.size() != 3) throw UsageError(fmt::format("sweep '{}' must look like start:stop:count", text));
  const double a = parse_double(parts[0], "sweep start");
  const double b = parse_double(parts[1], "sweep stop");
  const int count = parse_int(parts[2], "sweep count");
  if (count < 2) throw UsageError(fmt::format("sweep count {} must be at least 2", count));
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = a + (b - a) * i / (count - 1);
  out.back() = b;
  return out;
}

cplx parse_complex(const std::string& text) {
  if (text.empty()) throw UsageError("empty complex amplitude");
  if (text.back() != 'i') return {parse_double(text, "amplitude"), 0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag_part = [&](std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    if (s.front() == '+') s.erase(0, 1);
    return parse_double(s, "imaginary part");
  };
  if (cut == std::string::npos) return {0, imag_part(body)};
  return {parse_double(body.substr(0, cut), "real part"), imag_part(body.substr(cut))};
}

InputState parse_state(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError(fmt::format("state '{}' must start with n= or alpha=", text));
  const std::string kind = text.substr(0, eq);
  const auto parts = split(text.substr(eq + 1), ',');
  if (parts.size() != 3) throw UsageError(fmt::format("state '{}' needs three comma-separated entries", text));
  try {
    if (kind == "n") {
      return InputState::number(parse_int(parts[0], "n1"), parse_int(parts[1], "n2"), parse_int(parts[2], "n3"));
    }
    if (kind == "alpha") {
      return InputState::coherent(parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]));
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError(fmt::format("unknown state kind '{}' (use n= or alpha=)", kind));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-mode squeezed number states: moments, quasiprobabilities and a Fock-space oracle",
               "trisqueeze"};
  app.require_subcommand(1);

  ParamOptions params;
  OutputOptions output;
  std::string state;
  int c1 = 1, c2 = 1, mode = 1, j = 1, k = 2, s = 0, cutoff = 14;
  GridOptions grid;

  auto* coeffs = app.add_subcommand("coeffs", "Bogoliubov coefficients as JSON");
  auto* squeeze = app.add_subcommand("squeeze-sweep", "quadrature squeezing Sx, Sy");
  auto* g2s = app.add_subcommand("g2-sweep", "second-order correlation g2 of one mode");
  auto* cs = app.add_subcommand("cs-sweep", "Cauchy-Schwarz parameter V_jk");
  auto* wigner = app.add_subcommand("wigner-grid", "mode-1 quasiprobability on a grid");
  auto* origin = app.add_subcommand("origin-sweep", "mode-1 quasiprobability at the origin");
  auto* oracle = app.add_subcommand("oracle-verify", "compare against the truncated Fock-space oracle");
  for (auto* sub : {coeffs, squeeze, g2s, cs, wigner, origin, oracle}) {
    params.add(sub);
    output.add(sub);
  }
  for (auto* sub : {squeeze, g2s, cs, origin, oracle}) {
    sub->add_option("--state", state, "n=n1,n2,n3 or alpha=a1,a2,a3 (default vacuum)");
  }
  squeeze->add_option("--c1", c1, "weight of mode 2 in the quadrature (0 or 1)")->capture_default_str();
  squeeze->add_option("--c2", c2, "weight of mode 3 in the quadrature (0 or 1)")->capture_default_str();
  g2s->add_option("--mode", mode, "output mode")->capture_default_str();
  cs->add_option("--j", j)->capture_default_str();
  cs->add_option("--k", k)->capture_default_str();
  grid.add(wigner);
  origin->add_option("--s", s, "ordering: -1 or 0")->capture_default_str();
  oracle->add_option("--cutoff", cutoff, "per-mode Fock cutoff N")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) output.emit(out, cmd_coeffs(params));
    if (squeeze->parsed()) {
      try {
        QuadratureSelector check(c1, c2);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      output.emit(out, cmd_squeeze(params, c1, c2, state));
    }
    if (g2s->parsed()) output.emit(out, cmd_g2(params, mode, state));
    if (cs->parsed()) output.emit(out, cmd_cs(params, j, k, state));
    if (wigner->parsed()) cmd_wigner(params, grid, output, out);
    if (origin->parsed()) output.emit(out, cmd_origin(params, s, state));
    if (oracle->parsed()) output.emit(out, cmd_oracle(params, state, cutoff));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace trisqueeze::cli
