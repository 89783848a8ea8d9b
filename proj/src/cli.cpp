#include "cext/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cext/diagram.hpp"
#include "cext/report.hpp"
#include "cext/spectrum.hpp"
#include "cext/susy.hpp"

namespace cext::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultTruncation = 60;
constexpr const char* kTruncationEnv = "CEXT_OSC_DEFAULT_TRUNCATION";

struct ParamFlags {
  int lambda = 3;
  std::string alpha0;
  std::string alpha1;
  std::string alphas;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--lambda", f.lambda, "Order of the cyclic group")->check(CLI::Range(2, 64));
  cmd->add_option("--alpha0", f.alpha0, "alpha_0 as p/q, integer or finite decimal");
  cmd->add_option("--alpha1", f.alpha1, "alpha_1 as p/q, integer or finite decimal");
  cmd->add_option("--alphas", f.alphas, "Comma-separated alpha_0..alpha_{lambda-2}, or all lambda values");
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

AlgebraParams params_of(const ParamFlags& f) {
  std::vector<Rational> values;
  if (!f.alphas.empty()) {
    if (!f.alpha0.empty() || !f.alpha1.empty()) {
      throw std::invalid_argument("give either --alphas or --alpha0/--alpha1, not both");
    }
    values = parse_list(f.alphas);
  } else {
    if (!f.alpha0.empty()) values.push_back(Rational::parse(f.alpha0));
    if (!f.alpha1.empty()) values.push_back(Rational::parse(f.alpha1));
  }
  const auto lambda = static_cast<std::size_t>(f.lambda);
  if (values.size() == lambda) return AlgebraParams::from_alphas(std::move(values));
  if (values.size() + 1 == lambda) return AlgebraParams::create(f.lambda, values);
  throw std::invalid_argument("lambda = " + std::to_string(f.lambda) + " needs " + std::to_string(lambda - 1) +
                              " alpha values, got " + std::to_string(values.size()));
}

int default_truncation() {
  const char* env = std::getenv(kTruncationEnv);
  if (env == nullptr || *env == '\0') return kDefaultTruncation;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 2 || value > 4096) {
    throw std::invalid_argument(std::string(kTruncationEnv) + " must be an integer in [2, 4096]");
  }
  return static_cast<int>(value);
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// Maps library exceptions onto exit codes. Parameter errors derive from
// invalid_argument or domain_error; any other logic_error is an internal
// consistency failure.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

void print_report_text(const Report& r, std::ostream& out) {
  out << "lambda: " << r.lambda << '\n' << "alphas: " << join(r.alphas) << '\n';
  if (r.spectrum_type) {
    out << "label: " << r.spectrum_type->label << '\n' << "window: " << r.spectrum_type->window << '\n';
  }
  out << "prefix(" << r.levels << "): " << r.descriptor << '\n';
  if (r.oracle_agrees) out << "oracle: " << (*r.oracle_agrees ? "agrees" : "DISAGREES") << '\n';
  if (r.period) {
    if (r.period->periodic) {
      out << "period: omegas " << join(r.period->omegas) << " (total " << r.period->omega_total << ")\n";
    } else {
      out << "period: none (" << r.period->reason << ")\n";
    }
  }
  if (r.susy) {
    const auto& s = *r.susy;
    out << "susy omegas: " << join(s.omegas) << '\n'
        << "susy ground energies: " << join(s.ground_energies) << '\n'
        << "max residual: " << s.max_residual << " (tol " << s.tolerance << ", K = " << s.truncation << ")\n"
        << "interlacing: " << (s.interlacing ? "pass" : "FAIL") << '\n'
        << "top shift exact: " << (s.top_shift_exact ? "pass" : "FAIL") << '\n'
        << "operator periodicity: " << (s.operator_periodicity ? "pass" : "FAIL") << '\n'
        << "projection identity: " << (s.projection_identity ? "pass" : "FAIL") << '\n'
        << "susy: " << (s.pass ? "pass" : "FAIL") << '\n';
  }
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    print_report_text(r, out);
  }
}

// --- sweep ---------------------------------------------------------------

struct Axis {
  Rational lo;
  Rational hi;
  Rational step;
};

std::vector<Axis> parse_grid(const std::string& text) {
  std::vector<Axis> axes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto c1 = part.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : part.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("grid axis must be min:max:step, got '" + part + "'");
    Axis a{Rational::parse(part.substr(0, c1)), Rational::parse(part.substr(c1 + 1, c2 - c1 - 1)),
           Rational::parse(part.substr(c2 + 1))};
    if (a.step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
    if (a.hi < a.lo) throw std::invalid_argument("grid max must not be below min");
    axes.push_back(std::move(a));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (axes.size() != 2) throw std::invalid_argument("grid needs two axes: alpha0 and alpha1");
  return axes;
}

std::vector<Rational> axis_values(const Axis& a) {
  std::vector<Rational> out;
  for (Rational v = a.lo; v <= a.hi; v += a.step) {
    out.push_back(v);
    if (out.size() > 100000) throw std::invalid_argument("grid axis has too many points");
  }
  return out;
}

// Uniform rational points of the Fock domain alpha0 > -1, alpha1 > -2 - alpha0.
std::vector<std::pair<Rational, Rational>> random_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr long kDenominators[] = {1, 2, 3, 4, 6, 12, 5, 7};
  std::uniform_int_distribution<std::size_t> pick_den(0, std::size(kDenominators) - 1);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long d0 = kDenominators[pick_den(rng)];
    const long d1 = kDenominators[pick_den(rng)];
    std::uniform_int_distribution<long> u0(1, 25 * d0);
    const Rational a0 = Rational(-1) + Rational(u0(rng), d0);
    std::uniform_int_distribution<long> u1(1, 40 * d1);
    const Rational a1 = Rational(-2) - a0 + Rational(u1(rng), d1);
    out.emplace_back(a0, a1);
  }
  return out;
}

struct SweepResult {
  std::string line;
  std::optional<std::string> label;
  std::optional<std::string> disagreement;
};

SweepResult evaluate_point(std::size_t index, const Rational& a0, const Rational& a1, long levels) {
  SweepResult result;
  json j;
  try {
    const auto p = make_params3(a0, a1);
    const auto r = make_report(p, levels);
    j = to_json(r);
    result.label = r.spectrum_type->label;
    if (!r.oracle_agrees.value_or(false)) {
      result.disagreement = "expected " + expected_prefix(SpectrumType::parse(*result.label), levels).str() +
                            ", observed " + r.descriptor;
    }
  } catch (const ExistenceViolation& e) {
    j = {{"schema", kReportSchema}, {"alphas", {a0.str(), a1.str()}}, {"error", e.what()}};
  } catch (const std::logic_error& e) {
    j = {{"schema", kReportSchema}, {"alphas", {a0.str(), a1.str()}}, {"error", e.what()}};
    result.disagreement = e.what();
  }
  j["point"] = index;
  result.line = j.dump();
  return result;
}

int run_sweep(const std::vector<std::pair<Rational, Rational>>& points, long levels, unsigned threads,
              std::ostream& out) {
  std::vector<SweepResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      results[i] = evaluate_point(i, points[i].first, points[i].second, levels);
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, std::size_t> histogram;
  json disagreements = json::array();
  std::size_t admissible = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << r.line << '\n';
    if (r.label) {
      ++admissible;
      ++histogram[*r.label];
    }
    if (r.disagreement) {
      disagreements.push_back(
          {{"point", i}, {"alphas", {points[i].first.str(), points[i].second.str()}}, {"detail", *r.disagreement}});
    }
  }
  json summary = {{"points", points.size()},
                  {"admissible", admissible},
                  {"inadmissible", points.size() - admissible - disagreements.size()},
                  {"histogram", histogram},
                  {"disagreements", disagreements}};
  out << json{{"schema", kReportSchema}, {"summary", summary}}.dump() << '\n';
  return disagreements.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and SUSY hierarchies of C_lambda-extended oscillator algebras", "cext-osc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  ParamFlags params;
  std::string format = "json";
  long levels = 30;
  long count = 10;
  int truncation = 0;
  double tol = 1e-12;
  std::string omega_scale = "1";
  std::string grid;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  bool ascii = false;
  bool susy_style = false;
  int rows = 0;

  const auto format_check = CLI::IsMember({"json", "text"});

  auto* classify = app.add_subcommand("classify", "Spectrum type and degeneracy prefix");
  add_param_flags(classify, params);
  classify->add_option("--levels", levels, "Length of the level prefix")->check(CLI::Range(1L, 100000L));
  classify->add_option("--format", format, "json or text")->check(format_check);

  auto* spectrum = app.add_subcommand("spectrum", "Table of H_0 levels");
  add_param_flags(spectrum, params);
  spectrum->add_option("--count", count, "Number of levels")->check(CLI::Range(1L, 1000000L));
  spectrum->add_option("--format", format, "json or text")->check(format_check);

  auto* susy = app.add_subcommand("susy", "Build and verify the SUSY hierarchy");
  add_param_flags(susy, params);
  susy->add_option("--truncation", truncation, "Matrix truncation K (default 60 or $" + std::string(kTruncationEnv) + ")")
      ->check(CLI::Range(2, 4096));
  susy->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  susy->add_option("--levels", levels, "Length of the level prefix")->check(CLI::Range(1L, 100000L));
  susy->add_option("--omega-scale", omega_scale, "Multiply reported omegas and ground energies by this rational");
  susy->add_option("--format", format, "json or text")->check(format_check);

  auto* sweep = app.add_subcommand("sweep", "Classify a grid or random sample of lambda = 3 points (JSON lines)");
  auto* grid_opt = sweep->add_option("--grid", grid, "a0min:a0max:step,a1min:a1max:step");
  auto* random_opt = sweep->add_option("--random", random_count, "Number of random admissible points");
  grid_opt->excludes(random_opt);
  sweep->add_option("--seed", seed, "Seed for --random");
  sweep->add_option("--levels", levels, "Length of the level prefix")->check(CLI::Range(1L, 100000L));
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* diagram = app.add_subcommand("diagram", "Level diagram as SVG or ASCII");
  add_param_flags(diagram, params);
  diagram->add_option("--out", out_path, "SVG output file (default: stdout)");
  diagram->add_flag("--ascii", ascii, "Print an ASCII diagram instead of SVG");
  diagram->add_flag("--susy", susy_style, "Columns H^(0)..H^(lambda) of the partner Hamiltonians");
  diagram->add_option("--rows", rows, "Number of axis ticks (default 6, or 4 with --susy)")->check(CLI::Range(2, 200));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidParams;
  }

  if (classify->parsed()) {
    return guarded(err, [&] {
      const auto r = make_report(params_of(params), levels);
      emit(r, format, out);
      return r.oracle_agrees.value_or(true) ? kOk : kVerificationFailed;
    });
  }

  if (spectrum->parsed()) {
    return guarded(err, [&] {
      const auto p = params_of(params);
      const auto table = cext::levels(p, count);
      if (format == "json") {
        json rows_json = json::array();
        for (const auto& l : table) {
          rows_json.push_back({{"index", l.index}, {"subspace", l.subspace}, {"energy", l.energy.str()},
                               {"energy_float", l.energy.to_double()}});
        }
        std::vector<std::string> alphas;
        for (const auto& a : p.alphas()) alphas.push_back(a.str());
        out << json{{"schema", kReportSchema}, {"tool_version", tool_version()}, {"lambda", p.lambda()},
                    {"alphas", alphas}, {"levels", rows_json}}
                   .dump(2)
            << '\n';
      } else {
        out << std::left << std::setw(8) << "index" << std::setw(10) << "subspace" << std::setw(16) << "energy"
            << "energy_float" << std::right << '\n';
        for (const auto& l : table) {
          out << std::left << std::setw(8) << l.index << std::setw(10) << l.subspace << std::setw(16) << l.energy.str()
              << std::setprecision(12) << l.energy.to_double() << std::right << '\n';
        }
      }
      return kOk;
    });
  }

  if (susy->parsed()) {
    return guarded(err, [&] {
      const auto p = params_of(params);
      const int k = truncation > 0 ? truncation : default_truncation();
      const Rational scale = Rational::parse(omega_scale);
      if (scale.sign() <= 0) throw std::invalid_argument("--omega-scale must be positive");
      const auto h = build_hierarchy(p, k);
      auto r = make_report(p, levels);
      r.susy = make_susy_entry(h, tol, scale);
      emit(r, format, out);
      return r.susy->pass ? kOk : kVerificationFailed;
    });
  }

  if (sweep->parsed()) {
    return guarded(err, [&] {
      std::vector<std::pair<Rational, Rational>> points;
      if (!grid.empty()) {
        const auto axes = parse_grid(grid);
        const auto xs = axis_values(axes[0]);
        const auto ys = axis_values(axes[1]);
        if (xs.size() * ys.size() > 1000000) throw std::invalid_argument("grid has too many points");
        for (const auto& x : xs) {
          for (const auto& y : ys) points.emplace_back(x, y);
        }
      } else if (random_count > 0) {
        points = random_points(random_count, seed);
      } else {
        throw std::invalid_argument("sweep needs --grid or --random N");
      }
      return run_sweep(points, levels, threads, out);
    });
  }

  return guarded(err, [&] {
    const auto p = params_of(params);
    const auto spec = susy_style ? hierarchy_diagram(p, rows > 0 ? rows : 4) : spectrum_diagram(p, rows > 0 ? rows : 6);
    if (ascii) {
      out << render_ascii(spec);
      return kOk;
    }
    const std::string svg = render_svg(spec);
    if (out_path.empty()) {
      out << svg;
      return kOk;
    }
    std::ofstream file(out_path);
    if (!file || !(file << svg) || !file.flush()) {
      err << "error: cannot write " << out_path << '\n';
      return kIoError;
    }
    return kOk;
  });
}

}  // namespace cext::cli
