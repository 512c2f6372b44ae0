// Command-line front end: parse polynomials, dispatch to the counting
// methods, emit text/JSON/CSV, run the benchmark corpus.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 precondition violation,
// 4 internal invariant breach.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootcount/poly_io.hpp"
#include "rootcount/rootcount.hpp"

namespace fs = std::filesystem;
using namespace rootcount;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

ExtReal parse_endpoint(const std::string& s) {
  if (s == "-inf") return ExtReal::neg_inf();
  if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
  return ExtReal(parse_rat(s));
}

std::pair<ExtReal, ExtReal> parse_interval(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be \"a,b\": '" + s + "'");
  return {parse_endpoint(s.substr(0, comma)), parse_endpoint(s.substr(comma + 1))};
}

GaussRat parse_complex_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return GaussRat(parse_rat(s));
  return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

json load_poly_json(const std::string& coeffs_arg, const std::string& poly_file) {
  if (!coeffs_arg.empty() && !poly_file.empty())
    throw ParseError("give either --coeffs or --poly, not both");
  std::string text;
  if (!poly_file.empty()) {
    std::ifstream in(poly_file);
    if (!in) throw ParseError("cannot read polynomial file: " + poly_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!coeffs_arg.empty()) {
    // --coeffs takes just the coefficient array
    text = "{\"coeffs\":" + coeffs_arg + "}";
  } else {
    throw ParseError("missing polynomial: use --coeffs or --poly");
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON polynomial input");
  return j;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw ParseError("cannot write output file: " + out_file);
    out << text;
  }
}

std::string ext_str(const ExtReal& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

struct RealCmd {
  std::string method;
  std::string coeffs;
  std::string poly_file;
  std::string interval;
  std::string out;
  bool closed_right = false;
  bool json_mode = false;
};

int run_real(const RealCmd& cmd) {
  const auto [a, b] = parse_interval(cmd.interval);
  const bool native_closed_right = cmd.method == "fourier";
  if (cmd.closed_right && !native_closed_right)
    throw ParseError("--closed-right selects the (a,b] convention, but method '" + cmd.method +
                     "' counts over the open interval (a,b); refusing to convert");
  const RPoly p = parse_rpoly(load_poly_json(cmd.coeffs, cmd.poly_file));
  const std::string convention = native_closed_right ? "(a,b]" : "(a,b)";

  unsigned long result = 0;
  bool is_bound = false;
  bool exact = true;
  if (cmd.method == "sturm") {
    result = count_distinct_real(p, a, b);
  } else if (cmd.method == "sturm-ext") {
    result = count_real_mult(p, a, b);
  } else if (cmd.method == "fourier") {
    const ParityBound bf = budan_fourier_bound(p, a, b);
    result = bf.bound;
    is_bound = true;
    exact = bf.exact();
  } else {  // descartes
    if (!a.is_finite() || !b.is_finite())
      throw ParseError("descartes requires finite interval endpoints");
    const ParityBound d = descartes_roots_test(a.value(), b.value(), p);
    result = d.bound;
    is_bound = true;
    exact = d.exact();
  }

  std::ostringstream os;
  if (cmd.json_mode) {
    json j{{"method", cmd.method},
           {"interval", {ext_str(a), ext_str(b)}},
           {"convention", convention},
           {"result", result}};
    if (is_bound && !exact)
      j["exact"] = "unknown";
    else
      j["exact"] = true;
    os << j.dump() << "\n";
  } else if (is_bound) {
    os << "bound " << result;
    if (exact)
      os << " (exact: parity bound <= 1)";
    else
      os << " (true count <= bound, difference even)";
    os << "\n";
  } else {
    os << result << "\n";
  }
  emit(os.str(), cmd.out);
  return 0;
}

struct ComplexCmd {
  std::string region;
  std::string coeffs;
  std::string poly_file;
  std::string center = "0,0";
  std::string radius = "1";
  std::string anchor = "0,0";
  std::string direction = "1,0";
  std::string out;
  bool json_mode = false;
};

int run_complex(const ComplexCmd& cmd) {
  const CPoly p = parse_cpoly(load_poly_json(cmd.coeffs, cmd.poly_file));
  unsigned long result = 0;
  json params;
  if (cmd.region == "upper") {
    result = proots_upper(p);
  } else if (cmd.region == "ball") {
    const GaussRat center = parse_complex_pair(cmd.center);
    const Rat radius = parse_rat(cmd.radius);
    result = proots_ball(p, center, radius);
    params = {{"center", to_json(center)}, {"radius", rat_str(radius)}};
  } else {  // half-plane
    const HalfPlane h{parse_complex_pair(cmd.anchor), parse_complex_pair(cmd.direction)};
    result = proots_half_plane(p, h);
    params = {{"anchor", to_json(h.anchor)}, {"direction", to_json(h.direction)}};
  }
  std::ostringstream os;
  if (cmd.json_mode) {
    json j{{"method", cmd.region}, {"result", result}, {"exact", true}};
    if (!params.is_null()) j["params"] = params;
    os << j.dump() << "\n";
  } else {
    os << result << "\n";
  }
  emit(os.str(), cmd.out);
  return 0;
}

struct BenchCmd {
  std::string corpus_dir;
  std::string out;
  std::string interval = "0,1";
};

int run_bench(const BenchCmd& cmd) {
  const auto [a, b] = parse_interval(cmd.interval);
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(cmd.corpus_dir, ec))
    if (entry.path().extension() == ".json" &&
        entry.path().string().find(".spec.") == std::string::npos)
      files.push_back(entry.path());
  if (ec) throw ParseError("cannot read corpus directory: " + cmd.corpus_dir);
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "polynomial,method,result,seconds\n";
  auto timed = [&](const std::string& id, const std::string& method, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string result;
    try {
      result = std::to_string(fn());
    } catch (const PreconditionError& e) {
      result = "error";
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    csv << id << "," << method << "," << result << "," << dt.count() << "\n";
  };

  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot read corpus file: " + file.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed corpus file: " + file.string());
    const std::string id = file.stem().string();
    if (is_complex_poly_json(j)) {
      const CPoly p = parse_cpoly(j);
      timed(id, "upper", [&] { return proots_upper(p); });
      timed(id, "ball", [&] { return proots_ball(p, GaussRat(0), Rat(1)); });
    } else {
      const RPoly p = parse_rpoly(j);
      timed(id, "sturm", [&] { return count_distinct_real(p, a, b); });
      timed(id, "sturm-ext", [&] { return count_real_mult(p, a, b); });
      timed(id, "fourier", [&] { return budan_fourier_bound(p, a, b).bound; });
      timed(id, "descartes",
            [&] { return descartes_roots_test(a.value(), b.value(), p).bound; });
    }
  }
  emit(csv.str(), cmd.out);
  return 0;
}

struct GenCmd {
  std::uint64_t seed = 0;
  unsigned n = 1;
  int max_degree = 8;
  int coeff_bits = 8;
  std::string out_dir;
};

int run_gen(const GenCmd& cmd) {
  std::uint64_t seed = cmd.seed;
  if (const char* env = std::getenv("ROOTCOUNT_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::error_code ec;
  fs::create_directories(cmd.out_dir, ec);
  if (ec || !fs::is_directory(cmd.out_dir))
    throw ParseError("cannot create output directory: " + cmd.out_dir);
  for (unsigned k = 0; k < cmd.n; ++k) {
    const RootSpec spec = random_spec(seed + k, cmd.max_degree, cmd.coeff_bits);
    const RPoly p = build_rpoly(spec);
    char name[32];
    std::snprintf(name, sizeof(name), "poly_%03u", k);
    std::ofstream pf(fs::path(cmd.out_dir) / (std::string(name) + ".json"));
    pf << to_json(p).dump(1) << "\n";
    std::ofstream sf(fs::path(cmd.out_dir) / (std::string(name) + ".spec.json"));
    sf << to_json(spec).dump(1) << "\n";
    if (!pf || !sf) throw ParseError("cannot write into directory: " + cmd.out_dir);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root counting for univariate polynomials over the rationals"};
  app.require_subcommand(1);

  RealCmd real_cmd;
  auto* real = app.add_subcommand("real", "Count real roots in an interval");
  real->add_option("--method", real_cmd.method, "sturm | sturm-ext | fourier | descartes")
      ->required()
      ->check(CLI::IsMember({"sturm", "sturm-ext", "fourier", "descartes"}));
  real->add_option("--coeffs", real_cmd.coeffs, "coefficient array, lowest degree first");
  real->add_option("--poly", real_cmd.poly_file, "polynomial JSON file");
  real->add_option("--interval", real_cmd.interval, "interval \"a,b\" (-inf/inf allowed)")
      ->required();
  real->add_flag("--closed-right", real_cmd.closed_right, "use the (a,b] convention (fourier)");
  real->add_flag("--json", real_cmd.json_mode, "JSON output");
  real->add_option("--out", real_cmd.out, "write output to file");

  ComplexCmd complex_cmd;
  auto* complex = app.add_subcommand("complex", "Count complex roots in a region");
  complex->require_subcommand(1);
  auto add_complex_common = [&](CLI::App* sub) {
    sub->add_option("--coeffs", complex_cmd.coeffs, "coefficient array, lowest degree first");
    sub->add_option("--poly", complex_cmd.poly_file, "polynomial JSON file");
    sub->add_flag("--json", complex_cmd.json_mode, "JSON output");
    sub->add_option("--out", complex_cmd.out, "write output to file");
  };
  auto* upper = complex->add_subcommand("upper", "roots with Im z > 0");
  add_complex_common(upper);
  auto* ball = complex->add_subcommand("ball", "roots with |z - center| < radius");
  add_complex_common(ball);
  ball->add_option("--center", complex_cmd.center, "ball center \"re,im\"");
  ball->add_option("--radius", complex_cmd.radius, "ball radius (rational)");
  auto* half = complex->add_subcommand("half-plane", "roots with Im((z-anchor)/direction) > 0");
  add_complex_common(half);
  half->add_option("--anchor", complex_cmd.anchor, "anchor point \"re,im\"");
  half->add_option("--direction", complex_cmd.direction, "direction \"re,im\", nonzero");

  BenchCmd bench_cmd;
  auto* bench = app.add_subcommand("bench", "Run every method over a polynomial corpus");
  bench->add_option("--corpus", bench_cmd.corpus_dir, "corpus directory of *.json polynomials")
      ->required();
  bench->add_option("--interval", bench_cmd.interval, "interval for the real methods");
  bench->add_option("--out", bench_cmd.out, "CSV output file");

  GenCmd gen_cmd;
  auto* gen = app.add_subcommand("gen", "Generate random polynomials with ground truth");
  gen->add_option("--seed", gen_cmd.seed, "RNG seed (env ROOTCOUNT_SEED overrides)");
  gen->add_option("--n", gen_cmd.n, "number of polynomials")->check(CLI::PositiveNumber);
  gen->add_option("--max-degree", gen_cmd.max_degree, "degree budget per polynomial");
  gen->add_option("--coeff-bits", gen_cmd.coeff_bits, "bit size of root numerators/denominators");
  gen->add_option("--out-dir", gen_cmd.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
    if (real->parsed()) return run_real(real_cmd);
    if (complex->parsed()) {
      complex_cmd.region = upper->parsed() ? "upper" : (ball->parsed() ? "ball" : "half-plane");
      return run_complex(complex_cmd);
    }
    if (bench->parsed()) return run_bench(bench_cmd);
    if (gen->parsed()) return run_gen(gen_cmd);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
