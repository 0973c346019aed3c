#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "hgc/classify.hpp"
#include "hgc/counting.hpp"
#include "hgc/verify.hpp"
#include "io.hpp"

namespace {

using namespace hgc;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string m = "4";
  std::string q;
  int p = 0;
  int e = 1;
  bool exhaustive = false;
  bool construct = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1u << 24;
  std::string out;
  std::string format = "csv";
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string form;
};

// "4", "4..8" or "2,3,5".
std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  try {
    if (auto dots = s.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range " + s);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stoi(tok));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse '" + s + "' as an integer, list or range");
  }
  if (out.empty()) throw UsageError("empty value");
  return out;
}

int single(const std::string& s, const char* what) {
  const auto v = parse_list(s);
  if (v.size() != 1) throw UsageError(std::string(what) + " must be a single value for this command");
  return v.front();
}

// q = p^e with p prime.
std::pair<int, int> split_prime_power(int q) {
  if (q < 2) throw UsageError("q must be at least 2");
  int p = 2;
  while (q % p) ++p;
  int e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

class Runner {
 public:
  Runner(RunConfig cfg, const CLI::App& app) : cfg_(std::move(cfg)), app_(app) {}

  int run(const std::string& cmd) {
    if (cfg_.format != "csv" && cfg_.format != "json") throw UsageError("--format must be csv or json");
    if (cfg_.budget == 0) throw UsageError("--budget must be positive");
    if (cfg_.jobs < 1) throw UsageError("--jobs must be positive");
    fmt_ = cfg_.format == "json" ? io::Format::json : io::Format::csv;
    if (cmd == "params") return params();
    if (cmd == "points") return points();
    if (cmd == "lines") return lines();
    if (cmd == "genmat") return genmat();
    if (cmd == "weight") return weight();
    if (cmd == "spectrum") return spectrum_cmd();
    if (cmd == "classify") return classify();
    if (cmd == "bounds") return bounds();
    if (cmd == "min-word") return min_word();
    if (cmd == "verify") return verify();
    throw UsageError("unknown command " + cmd);
  }

 private:
  bool given(const std::string& name) const {
    for (const auto* sub : app_.get_subcommands())
      if (sub->count(name)) return true;
    return false;
  }

  std::ostream& out() {
    if (cfg_.out.empty()) return std::cout;
    if (!file_) {
      file_.emplace(cfg_.out, std::ios::binary);
      if (!*file_) throw UsageError("cannot write " + cfg_.out);
    }
    return *file_;
  }

  Field field() const {
    if (cfg_.p > 0) return Field::make(cfg_.p, cfg_.e);
    const auto [p, e] = split_prime_power(cfg_.q.empty() ? 2 : single(cfg_.q, "-q"));
    return Field::make(p, e);
  }

  io::FormFile instance(const Field& f, int m) const { return {m, f.p(), f.e(), {}}; }

  ProjectiveSystem system(const Field& f, int m) const {
    if (m < 4) throw UsageError("m must be at least 4");
    return build_system(HermitianSpace(f, m));
  }

  // The form file fixes (m, p, e); explicit flags must agree with it.
  std::pair<io::FormFile, AlternatingForm> load_form() const {
    if (cfg_.form.empty()) throw UsageError("--form FILE is required");
    io::FormFile ff = io::read_form_file(cfg_.form);
    const Field f = Field::make(ff.p, ff.e);
    if (given("-m") && single(cfg_.m, "-m") != ff.m) throw UsageError("-m disagrees with the form file");
    if ((given("-p") || given("-q")) && field() != f) throw UsageError("field disagrees with the form file");
    return {ff, AlternatingForm::from_upper(f, ff.m, ff.upper)};
  }

  int params() {
    std::vector<io::ParamsRow> rows;
    for (int q : parse_list(cfg_.q.empty() ? "2" : cfg_.q))
      for (int m : parse_list(cfg_.m)) {
        if (m < 4) throw UsageError("m must be at least 4");
        if (q < 2) throw UsageError("q must be at least 2");
        rows.push_back({m, q, hgc::params(m, q)});
      }
    io::write_params(out(), rows, fmt_);
    return kExitOk;
  }

  int points() {
    const Field f = field();
    const int m = single(cfg_.m, "-m");
    if (m < 2) throw UsageError("m must be at least 2");
    const HermitianSpace s(f, m);
    io::write_points(out(), f, m, enumerate_points(s), fmt_);
    return kExitOk;
  }

  int lines() {
    const Field f = field();
    const int m = single(cfg_.m, "-m");
    const auto sys = system(f, m);
    io::write_lines(out(), f, m, sys.lines(), fmt_);
    return kExitOk;
  }

  int genmat() {
    const Field f = field();
    io::write_genmat(out(), system(f, single(cfg_.m, "-m")));
    return kExitOk;
  }

  int weight() {
    const auto [ff, phi] = load_form();
    const auto sys = system(phi.field(), ff.m);
    const PointStar star(sys.space(), sys.points(), sys.lines());
    io::write_weights(out(), check_form(phi, sys, star), fmt_);
    return kExitOk;
  }

  int spectrum_cmd() {
    if (cfg_.exhaustive && cfg_.sample) throw UsageError("--exhaustive and --sample are exclusive");
    const Field f = field();
    const int m = single(cfg_.m, "-m");
    const auto sys = system(f, m);
    SpectrumOptions opt;
    opt.exhaustive = cfg_.sample == 0;
    opt.samples = cfg_.sample;
    opt.seed = cfg_.seed;
    opt.budget = cfg_.budget;
    opt.jobs = cfg_.jobs;
    SpectrumReport rep;
    try {
      rep = spectrum(sys, opt);
    } catch (const std::length_error& ex) {
      throw UsageError(ex.what());
    }
    io::write_spectrum(out(), rep, instance(f, m), fmt_);
    if (cfg_.out.empty()) {
      io::write_spectrum_meta(std::cerr, rep);
    } else {
      std::ofstream meta(cfg_.out + ".meta.json", std::ios::binary);
      io::write_spectrum_meta(meta, rep);
    }
    return kExitOk;
  }

  int classify() {
    const auto [ff, phi] = load_form();
    const auto sys = system(phi.field(), ff.m);
    io::write_classification(out(), abc_partition(phi, sys), fmt_);
    return kExitOk;
  }

  int bounds() {
    const int m = single(cfg_.m, "-m");
    if (m < 4) throw UsageError("m must be at least 4");
    const int q = cfg_.p > 0 ? field().q() : single(cfg_.q.empty() ? "2" : cfg_.q, "-q");
    if (q < 2) throw UsageError("q must be at least 2");
    io::write_bounds(out(), bound_table(m, q), fmt_);
    return kExitOk;
  }

  int min_word() {
    if (cfg_.exhaustive && cfg_.construct) throw UsageError("--construct and --exhaustive are exclusive");
    const Field f = field();
    const int m = single(cfg_.m, "-m");
    const auto sys = system(f, m);
    const auto strategy = cfg_.exhaustive ? MinDistanceStrategy::exhaustive : MinDistanceStrategy::construct_and_sample;
    MinDistanceResult r;
    try {
      r = min_distance(sys, strategy, cfg_.sample, cfg_.seed, cfg_.jobs, cfg_.budget);
    } catch (const std::length_error& ex) {
      throw UsageError(ex.what());
    }
    io::write_min_distance(out(), r, instance(f, m), fmt_);
    return kExitOk;
  }

  int verify() {
    VerifyOptions opt;
    opt.seed = cfg_.seed;
    opt.budget = cfg_.budget;
    opt.jobs = cfg_.jobs;
    if (cfg_.sample) opt.samples = cfg_.sample;
    std::vector<CheckResult> checks;
    if (given("-m")) {
      const Field f = field();
      checks = verify_instance(single(cfg_.m, "-m"), f.p(), f.e(), opt);
    } else {
      checks = acceptance_suite(opt);
    }
    io::write_checks(out(), checks, fmt_);
    for (const auto& c : checks)
      if (!c.pass) return kExitFailed;
    return kExitOk;
  }

  RunConfig cfg_;
  const CLI::App& app_;
  io::Format fmt_ = io::Format::csv;
  std::optional<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line Hermitian Grassmann codes over GF(q^2)"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"params", "N, K, d_min for ranges of m and q"},
      {"points", "isotropic points"},
      {"lines", "totally isotropic lines"},
      {"genmat", "generator matrix"},
      {"weight", "weight of a form by three methods"},
      {"spectrum", "weight distribution"},
      {"classify", "A/B/C partition of a form"},
      {"bounds", "weight bounds by rank"},
      {"min-word", "minimum distance with a witness"},
      {"verify", "check invariants for one (m,q), or the full acceptance suite"},
  };
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-m", cfg.m, "dimension m (params accepts a..b or a,b)");
    sub->add_option("-q", cfg.q, "q, a prime power (params accepts a..b or a,b)");
    sub->add_option("-p", cfg.p, "characteristic");
    sub->add_option("-e", cfg.e, "q = p^e");
    sub->add_option("--seed", cfg.seed, "seed for sampled and randomized paths");
    sub->add_option("--budget", cfg.budget, "largest number of forms for an exhaustive scan");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--sample", cfg.sample, "number of seeded random forms");
    const std::string name = c.name;
    if (name == "weight" || name == "classify") sub->add_option("--form", cfg.form, "form JSON file")->required();
    if (name == "spectrum" || name == "min-word") sub->add_flag("--exhaustive", cfg.exhaustive, "scan every form");
    if (name == "min-word") sub->add_flag("--construct", cfg.construct, "constructed witness (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    Runner runner(cfg, app);
    return runner.run(app.get_subcommands().front()->get_name());
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const io::FormatError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}
