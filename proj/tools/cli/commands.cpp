#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "instanton/construct.hpp"
#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "instanton/membership.hpp"
#include "instanton/random.hpp"
#include "instanton/tangent.hpp"
#include "serialize.hpp"

namespace instanton::cli {

using nlohmann::json;

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::string report_path_for(const std::string& out) {
  const std::string suffix = ".json";
  const std::string stem =
      out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0
          ? out.substr(0, out.size() - suffix.size())
          : out;
  return stem + ".report.json";
}

// Options shared by every subcommand; unused ones are simply ignored.
struct Options {
  std::string file;
  std::string out;
  std::string report;
  std::optional<std::uint32_t> prime;
  std::size_t n = 0;
  std::optional<std::size_t> r;
  std::string strategy = "invertible";
  std::uint64_t seed = 0;
  std::size_t trials = 300;
  std::size_t ext = 2;
  int tmin = -4;
  int tmax = 1;
  std::string tau_spec;
};

struct Outputs {
  std::ostream& out;
  std::ostream& err;
};

void emit_report(const Options& o, Outputs& io, const json& report) {
  const std::string text = dump(report);
  if (!o.report.empty()) write_file(o.report, text);
  io.out << text;
}

// A hyperweb goes to --out (report to --report or next to it, and stdout);
// without --out the hyperweb itself is written to stdout.
void emit_hyperweb(const Options& o, Outputs& io, const Hyperweb& web, const json& report) {
  if (o.out.empty()) {
    io.out << dump_hyperweb(web);
    if (!o.report.empty()) write_file(o.report, dump(report));
    return;
  }
  write_file(o.out, dump_hyperweb(web));
  const std::string text = dump(report);
  write_file(o.report.empty() ? report_path_for(o.out) : o.report, text);
  io.out << text;
}

HyperwebFile load(const Options& o) { return parse_hyperweb(read_file(o.file), o.prime); }

std::size_t infer_half_rank(const Hyperweb& a) {
  const std::size_t rk = rank(a.matrix());
  const std::size_t n = a.charge();
  return rk >= 2 * n + 2 ? rk / 2 - n : 1;
}

json base_parameters(const Options& o) {
  json p = json::object();
  if (!o.file.empty()) p["input"] = o.file;
  if (o.prime) p["prime"] = *o.prime;
  return p;
}

int cmd_sample(const Options& o, Outputs& io) {
  const std::uint32_t prime = o.prime.value_or(kDefaultPrime);
  set_modulus(prime);
  if (o.n < 1) throw ParameterError("--n must be at least 1");
  const std::size_t r = o.r.value_or(o.n);
  json sampler = {{"strategy", o.strategy}};
  std::optional<Hyperweb> web;
  if (o.strategy == "invertible") {
    if (r != o.n) throw ParameterError("strategy invertible needs r = n");
    web = sample_invertible(o.n, o.seed);
  } else if (o.strategy == "vacuous" || o.strategy == "ansatz") {
    const auto strategy = o.strategy == "vacuous" ? BCStrategy::Vacuous : BCStrategy::Ansatz;
    const BCSample s = sample_bc(o.n, r, strategy, o.seed, {20, o.trials, o.ext});
    sampler["attempts"] = s.attempts;
    sampler["log"] = s.log;
    if (s.rho) sampler["rho_bc"] = to_json(*s.rho);
    if (s.tau) sampler["tau_bc"] = to_json(*s.tau);
    if (!s.pair) {
      io.err << "sample: no (B, C) pair found for (n, r) = (" << o.n << ", " << r << ")\n";
      for (const auto& line : s.log) io.err << "  " << line << "\n";
      return kExitFail;
    }
    web = assemble_from_bc(*s.pair, Splitting::coordinate(2 * o.n - r, o.n));
  } else if (o.strategy == "tau-restrict") {
    // source: an (n, 1) hyperweb of charge 2n-1 with invertible leading block
    const auto strategy = o.n <= 2 ? BCStrategy::Vacuous : BCStrategy::Ansatz;
    const BCSample s = sample_bc(o.n, 1, strategy, o.seed, {20, o.trials, o.ext});
    sampler["source_attempts"] = s.attempts;
    sampler["source_log"] = s.log;
    if (!s.pair) {
      io.err << "sample: no charge-" << 2 * o.n - 1 << " source found\n";
      return kExitFail;
    }
    const Splitting xi = Splitting::coordinate(2 * o.n - 1, o.n);
    web = tau_restrict_construct(assemble_from_bc(*s.pair, xi), xi, r, derive_seed(o.seed, 2));
  } else {
    throw ParameterError("unknown strategy " + o.strategy);
  }
  const MembershipReport m = check_membership(*web, r, {o.trials, o.ext, derive_seed(o.seed, 1)});
  json params = {{"n", o.n}, {"r", r}, {"strategy", o.strategy}, {"prime", prime},
                 {"trials", o.trials}, {"ext", o.ext}};
  const json report = make_report({"sample", params, o.seed},
                                  {{"charge", web->charge()}, {"sampler", sampler}, {"membership", to_json(m)}});
  emit_hyperweb(o, io, *web, report);
  return m.overall() ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o, Outputs& io) {
  const auto file = load(o);
  const std::size_t r = o.r.value_or(infer_half_rank(file.web));
  const MembershipReport m = check_membership(file.web, r, {o.trials, o.ext, o.seed});
  json params = base_parameters(o);
  params.update({{"r", r}, {"r_inferred", !o.r}, {"trials", o.trials}, {"ext", o.ext}});
  emit_report(o, io, make_report({"verify", params, o.seed}, to_json(m)));
  return m.overall() ? kExitPass : kExitFail;
}

int cmd_cohomology(const Options& o, Outputs& io) {
  const auto file = load(o);
  const std::size_t r = o.r.value_or(infer_half_rank(file.web));
  json params = base_parameters(o);
  params.update({{"r", r}, {"tmin", o.tmin}, {"tmax", o.tmax}});
  const Monad m = build_monad(file.web, r);
  json result = to_json(cohomology_table(m, o.tmin, o.tmax), m);
  const std::size_t h0 = h0_global(m);
  result["h0_global"] = h0;
  result["h1_tensor_omega"] = h0 == 0 ? json(h1_tensor_omega(m)) : json(nullptr);
  emit_report(o, io, make_report({"cohomology", params, 0}, std::move(result)));
  return kExitPass;
}

int cmd_tangent(const Options& o, Outputs& io) {
  const auto file = load(o);
  const std::size_t r = o.r.value_or(infer_half_rank(file.web));
  json params = base_parameters(o);
  params["r"] = r;
  emit_report(o, io, make_report({"tangent", params, 0}, to_json(tangent_dimension(file.web, r))));
  return kExitPass;
}

int cmd_star(const Options& o, Outputs& io) {
  const auto file = load(o);
  const StarCertificate s = property_star(file.web, o.n, o.trials, o.seed);
  json params = base_parameters(o);
  params.update({{"n", o.n}, {"trials", o.trials}});
  json result = to_json(s);
  result["verdict"] = s.found ? "found" : "inconclusive";
  emit_report(o, io, make_report({"star", params, o.seed}, std::move(result)));
  return s.found ? kExitPass : kExitInconclusive;
}

int cmd_gl(const Options& o, Outputs& io) {
  const auto file = load(o);
  Rng rng(o.seed);
  const Matrix<Fp> g = rng.invertible_matrix(file.web.charge());
  const json report = make_report({"gl", base_parameters(o), o.seed}, {{"g", matrix_to_json(g)}});
  emit_hyperweb(o, io, gl_act(file.web, g), report);
  return kExitPass;
}

// "coords:i,j,..." picks basis vectors; "random:dim:seed" a random injection.
Matrix<Fp> parse_tau(const std::string& spec, std::size_t charge) {
  auto fail = [&](const std::string& why) -> Matrix<Fp> {
    throw ParameterError("--tau-spec \"" + spec + "\": " + why);
  };
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail("bad number \"" + s + "\"");
    return std::stoull(s);
  };
  if (spec.rfind("coords:", 0) == 0) {
    std::vector<std::size_t> cols;
    std::stringstream in(spec.substr(7));
    for (std::string item; std::getline(in, item, ',');) cols.push_back(number(item));
    if (cols.empty()) return fail("no coordinates");
    Matrix<Fp> tau(charge, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] >= charge) return fail("coordinate out of range");
      tau(cols[k], k) = Fp::one();
    }
    return tau;
  }
  if (spec.rfind("random:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return fail("expected random:dim:seed");
    const std::uint64_t dim = number(rest.substr(0, colon));
    if (dim < 1 || dim > charge) return fail("dim must lie in [1, charge]");
    Rng rng(number(rest.substr(colon + 1)));
    return rng.injective_matrix(charge, dim);
  }
  return fail("expected coords:... or random:dim:seed");
}

int cmd_restrict(const Options& o, Outputs& io) {
  const auto file = load(o);
  const Matrix<Fp> tau = parse_tau(o.tau_spec, file.web.charge());
  json params = base_parameters(o);
  params["tau_spec"] = o.tau_spec;
  const json report = make_report({"restrict", params, 0}, {{"tau", matrix_to_json(tau)}});
  emit_hyperweb(o, io, restrict_along(file.web, tau), report);
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int(const Options&, Outputs&)> action;
  CLI::App app{"Symplectic instanton data over finite fields", "instanton"};
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Hyperweb JSON file")->required();
    sub->add_option("--prime", o.prime, "Expected session prime; must match the file");
    sub->add_option("--report", o.report, "Also write the report to this path");
  };

  auto* sample = app.add_subcommand("sample", "Sample a hyperweb and verify membership");
  sample->add_option("--n", o.n, "n")->required();
  sample->add_option("--r", o.r, "r (defaults to n)");
  sample->add_option("--strategy", o.strategy, "Sampler")
      ->check(CLI::IsMember({"vacuous", "ansatz", "tau-restrict", "invertible"}));
  sample->add_option("--seed", o.seed, "Seed");
  sample->add_option("--prime", o.prime, "Field prime");
  sample->add_option("--out", o.out, "Hyperweb output path");
  sample->add_option("--report", o.report, "Report output path");
  sample->add_option("--trials", o.trials, "Fiber-check points")->check(CLI::PositiveNumber);
  sample->add_option("--ext", o.ext, "Extension degree of the sample points")->check(CLI::Range(1, 4));
  sample->callback([&] { action = cmd_sample; });

  auto* verify = app.add_subcommand("verify", "Check membership in MI(N, r)");
  add_file(verify);
  verify->add_option("--r", o.r, "r (inferred from the rank if omitted)");
  verify->add_option("--trials", o.trials, "Fiber-check points")->check(CLI::PositiveNumber);
  verify->add_option("--ext", o.ext, "Extension degree of the sample points")->check(CLI::Range(1, 4));
  verify->add_option("--seed", o.seed, "Seed");
  verify->callback([&] { action = cmd_verify; });

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology table of the monad");
  add_file(cohomology);
  cohomology->add_option("--r", o.r, "r (inferred from the rank if omitted)");
  cohomology->add_option("--tmin", o.tmin, "Lowest twist (>= -4)");
  cohomology->add_option("--tmax", o.tmax, "Highest twist");
  cohomology->callback([&] { action = cmd_cohomology; });

  auto* tangent = app.add_subcommand("tangent", "Tangent dimension and expected dimensions");
  add_file(tangent);
  tangent->add_option("--r", o.r, "r (inferred from the rank if omitted)");
  tangent->callback([&] { action = cmd_tangent; });

  auto* star = app.add_subcommand("star", "Search for a property (*) witness");
  add_file(star);
  star->add_option("--n", o.n, "Dimension of the subspace")->required();
  star->add_option("--trials", o.trials, "Injections to try")->check(CLI::PositiveNumber);
  star->add_option("--seed", o.seed, "Seed");
  star->callback([&] {
    if (star->count("--trials") == 0) o.trials = 50;
    action = cmd_star;
  });

  auto* gl = app.add_subcommand("gl", "Apply a random element of GL(H)");
  add_file(gl);
  gl->add_option("--seed", o.seed, "Seed");
  gl->add_option("--out", o.out, "Hyperweb output path");
  gl->callback([&] { action = cmd_gl; });

  auto* restrict = app.add_subcommand("restrict", "Pull back along tau");
  add_file(restrict);
  restrict->add_option("--tau-spec", o.tau_spec, "coords:i,j,... or random:dim:seed")->required();
  restrict->add_option("--out", o.out, "Hyperweb output path");
  restrict->callback([&] { action = cmd_restrict; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Outputs io{out, err};
  try {
    return action(o, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrimeMismatch& e) {
    err << "prime mismatch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace instanton::cli
