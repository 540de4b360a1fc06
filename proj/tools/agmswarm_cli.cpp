// agmswarm: command-line front end for the finite-field AGM swarm library.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 for usage errors and rejected inputs.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "agmswarm/agm_classical.hpp"
#include "agmswarm/elliptic.hpp"
#include "agmswarm/error.hpp"
#include "agmswarm/finite_field.hpp"
#include "agmswarm/hilbert_class_poly.hpp"
#include "agmswarm/hurwitz.hpp"
#include "agmswarm/hypergeom.hpp"
#include "agmswarm/quadratic_forms.hpp"
#include "agmswarm/summary_io.hpp"
#include "agmswarm/swarm.hpp"
#include "agmswarm/tables.hpp"
#include "agmswarm/theorems.hpp"

namespace {

using namespace agmswarm;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::uint64_t guard = 0;
  double tol = 0;
  std::string cache_dir;
  std::string dot;
  std::string out;

  std::string a, b, lambda;
  bool brute = false;
  std::int64_t D = 0;
  std::int64_t N = 0;
  std::uint64_t qmin = 7, qmax = 0;
  bool table = false;
  int iters = 4;
  int digits = 30;
};

/// Rows of the machine-readable verification report.
class Report {
 public:
  void add(std::uint64_t q, const std::string& check, bool pass, const std::string& detail = {}) {
    json row{{"q", q}, {"check", check}, {"status", pass ? "pass" : "fail"}};
    if (!detail.empty()) row["detail"] = detail;
    rows_.push_back(std::move(row));
    if (!pass && first_failure_.empty()) {
      first_failure_ = "q=" + std::to_string(q) + " " + check + (detail.empty() ? "" : ": " + detail);
    }
  }
  bool pass() const { return first_failure_.empty(); }
  const std::string& first_failure() const { return first_failure_; }
  void write(const std::string& path) const {
    if (!path.empty()) io::write_atomic(path, json{{"schema_version", io::kSchemaVersion}, {"checks", rows_}}.dump(2) + "\n");
  }

 private:
  json rows_ = json::array();
  std::string first_failure_;
};

int finish(const Report& report, const Options& o) {
  report.write(o.out);
  if (!report.pass()) {
    std::cout << "FAIL " << report.first_failure() << "\n";
    return kFail;
  }
  std::cout << "PASS\n";
  return kPass;
}

std::optional<std::filesystem::path> cache_path(const Options& o) {
  if (o.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(o.cache_dir);
}

std::uint64_t vertex_guard(const Options& o) { return o.guard ? o.guard : swarm::kDefaultVertexGuard; }

void write_text(const std::string& path, const std::string& text) { io::write_atomic(path, text); }

int cmd_swarm(const Options& o) {
  auto F = Field::create(o.p, o.r);
  std::optional<swarm::SwarmSummary> summary;
  std::optional<io::SummaryCache> cache;
  if (auto dir = cache_path(o)) cache.emplace(*dir);
  if (cache && o.dot.empty()) summary = cache->load(o.p, o.r);
  if (!summary) {
    const auto g = swarm::build_swarm(F, vertex_guard(o));
    summary = swarm::summarize(g);
    if (cache) cache->store(*summary);
    if (!o.dot.empty()) write_text(o.dot, swarm::export_dot(g));
  }
  const auto& s = *summary;
  std::cout << "q=" << s.q << " vertices=" << s.vertex_count << " d=" << s.d << " min=" << s.min_size
            << " max=" << s.max_size << "\n";
  std::cout << std::setw(6) << "trace" << std::setw(8) << "size" << std::setw(6) << "m"
            << "  signature\n";
  for (const auto& c : s.classes) {
    std::ostringstream sig;
    sig << std::hex << std::setw(16) << std::setfill('0') << c.signature_hash;
    std::cout << std::setw(6) << (c.trace ? std::to_string(*c.trace) : "-") << std::setw(8) << c.size
              << std::setw(6) << c.multiplicity << "  " << sig.str() << "\n";
  }
  if (!o.out.empty()) write_text(o.out, io::render_summary(s));
  return kPass;
}

int cmd_orbit(const Options& o) {
  auto F = Field::create(o.p, o.r);
  const swarm::AgmPair seed{F->parse(o.a), F->parse(o.b)};
  const auto J = swarm::jellyfish_of_seed(F, seed);
  std::cout << "q=" << F->q() << " seed=" << swarm::render(*F, seed) << " size=" << J.size
            << " cycle=" << J.cycle.size();
  if (J.trace) std::cout << " trace=" << *J.trace;
  std::cout << "\n";
  if (J.cycle.size() <= 64) {
    for (std::size_t i = 0; i < J.cycle.size(); ++i) {
      std::cout << "  " << swarm::render(*F, J.cycle[i]) << " <- " << swarm::render(*F, J.tentacles[i]) << "\n";
    }
  }
  if (!o.dot.empty()) write_text(o.dot, swarm::export_dot(*F, J));
  return kPass;
}

int cmd_curve(const Options& o) {
  auto F = Field::create(o.p, o.r);
  const FieldElement l = F->parse(o.lambda);
  elliptic::require_curve_domain(*F, l);
  const std::int64_t t = elliptic::trace_char_sum(F, l);
  const std::uint64_t guard = o.guard ? o.guard : elliptic::kDefaultBruteGuard;
  std::cout << "t=" << t << " #E=" << static_cast<std::int64_t>(F->q()) + 1 - t;
  if (o.brute) {
    const auto shape = elliptic::group_structure(*F, l, guard);
    std::cout << " brute=" << elliptic::point_count_brute(*F, l, guard) << " group=(" << shape.m << ","
              << shape.n << ")";
  }
  std::cout << " j=" << F->render(elliptic::j_invariant(*F, l)) << "\n";
  return kPass;
}

int cmd_classnum(const Options& o) {
  const auto forms = classes::reduced_forms(o.D);
  std::cout << "h(" << o.D << ")=" << forms.size() << "\n";
  for (const auto& f : forms) std::cout << "  " << f.str() << "\n";
  return kPass;
}

int cmd_hurwitz(const Options& o) {
  std::cout << "H(" << o.N << ")=" << classes::hurwitz_H(o.N).str() << "\n";
  return kPass;
}

int cmd_h2(const Options& o) {
  const auto f = classes::prime_form_above_two(o.D);
  std::cout << "h2(" << o.D << ")=" << classes::h2(o.D) << " form=" << f.str()
            << " h=" << classes::class_number(o.D) << "\n";
  return kPass;
}

int cmd_hcp(const Options& o) {
  const auto poly = classes::hilbert_class_poly(o.D, o.guard ? static_cast<std::int64_t>(o.guard)
                                                            : classes::kDefaultHcpDegreeGuard);
  std::cout << poly.str() << "\n";
  return kPass;
}

void print_hyper(const hypergeom::HyperSuiteReport& rep, Report& report) {
  auto line = [&](const char* name, const hypergeom::SweepStat& s, bool gate) {
    std::cout << "  " << std::left << std::setw(22) << name << std::right << " checked=" << s.checked
              << " failed=" << s.failed << " worst=" << std::scientific << std::setprecision(2) << s.worst
              << std::defaultfloat << (gate ? "" : " (informational)") << "\n";
    if (gate) report.add(rep.q, name, s.pass(), std::to_string(s.failed) + " of " + std::to_string(s.checked));
  };
  std::cout << "q=" << rep.q << "\n";
  line("trace identity", rep.trace_identity, true);
  line("S vs phi(-1) q 2F1", rep.integral, true);
  line("I_ff edge invariance", rep.invariance, true);
  line("S edge invariance", rep.s_invariance, false);
}

int cmd_hyper(const Options& o) {
  Report report;
  const double tol = o.tol > 0 ? o.tol : 1e-6;
  print_hyper(hypergeom::run_hyper_suite(Field::create(o.p, o.r), tol), report);
  return finish(report, o);
}

int cmd_verify_thm1(const Options& o) {
  Report report;
  const std::uint64_t qmax = o.qmax ? o.qmax : 2000;
  std::size_t n = 0;
  for (const auto& pp : theorems::prime_powers_3_mod_4(o.qmin, qmax, false)) {
    const auto rep = theorems::verify_class_number_identity(pp.q, pp.p);
    report.add(pp.q, "thm1", rep.pass, rep.str());
    if (!rep.pass) std::cout << rep.str() << "\n";
    ++n;
  }
  std::cout << "checked " << n << " prime powers in [" << o.qmin << ", " << qmax << "]\n";
  return finish(report, o);
}

void run_thm3(std::uint64_t p, unsigned r, const Options& o, classes::HcpCache& hcp, Report& report, bool print) {
  const auto g = swarm::build_swarm(Field::create(p, r), vertex_guard(o));
  const auto rep = theorems::verify_size_law(g, hcp);
  if (print) std::cout << rep.table();
  for (const auto& row : rep.rows) {
    for (const auto& c : row.checks) {
      report.add(rep.q, "t=" + std::to_string(row.t) + " size=" + std::to_string(row.size) + " " + c.name, c.pass,
                 c.detail);
    }
  }
  for (const auto& c : rep.aggregate) report.add(rep.q, c.name, c.pass, c.detail);
  for (const auto& note : rep.notes) std::cout << "note q=" << rep.q << ": " << note << "\n";
}

int cmd_verify_thm3(const Options& o) {
  Report report;
  classes::HcpCache hcp(o.guard ? static_cast<std::int64_t>(o.guard) : classes::kDefaultHcpDegreeGuard);
  if (o.p) {
    run_thm3(o.p, o.r, o, hcp, report, true);
  } else {
    const std::uint64_t qmax = o.qmax ? o.qmax : 300;
    for (const auto& pp : theorems::prime_powers_3_mod_4(o.qmin, qmax, false)) {
      run_thm3(pp.p, pp.r, o, hcp, report, o.table);
    }
  }
  return finish(report, o);
}

int cmd_verify_hyper(const Options& o) {
  Report report;
  const double tol = o.tol > 0 ? o.tol : 1e-6;
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  if (o.p) fields.push_back({o.p, o.r});
  else fields = {{7, 1}, {11, 1}, {19, 1}, {23, 1}, {31, 1}};
  for (auto [p, r] : fields) print_hyper(hypergeom::run_hyper_suite(Field::create(p, r), tol), report);
  return finish(report, o);
}

int cmd_verify_structure(const Options& o) {
  Report report;
  std::vector<theorems::PrimePower> fields;
  if (o.p) fields.push_back({0, o.p, o.r});
  else fields = theorems::prime_powers_3_mod_4(o.qmin, o.qmax ? o.qmax : 200, true);
  for (const auto& pp : fields) {
    const auto g = swarm::build_swarm(Field::create(pp.p, pp.r), vertex_guard(o));
    const auto rep = theorems::verify_structure(g);
    for (const auto& c : rep.checks) {
      report.add(rep.q, c.name, c.pass, c.detail);
      if (o.p) std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
    }
  }
  return finish(report, o);
}

int cmd_tables(const std::string& which, const Options& o) {
  tables::SwarmSource source(cache_path(o), vertex_guard(o));
  classes::HcpCache hcp;
  tables::TableResult res;
  if (which == "fig3") res = tables::fig3(source);
  else if (which == "fig4") res = tables::fig4(source);
  else res = tables::ex271(source, hcp);
  std::cout << res.text;
  if (!o.out.empty()) write_text(o.out, res.text);
  for (const auto& d : res.diffs) std::cout << "- " << d << "\n";
  return res.match ? kPass : kFail;
}

int cmd_pi(const Options& o) {
  if (o.iters < 1) throw Error(ErrorCode::DomainError, "--iters must be >= 1");
  const auto st = classical::pi_sequence(o.iters);
  const auto pi = classical::pi();
  for (int i = 0; i < o.iters; ++i) {
    const auto err = boost::multiprecision::abs(st.p[i] - pi);
    std::cout << "p" << i + 1 << " = " << st.p[i].str(o.digits) << "  |p - pi| = " << err.str(3, std::ios::scientific)
              << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AGM swarms over finite fields and their class-number checks"};
  app.require_subcommand(1);
  Options o;

  auto field_opts = [&](CLI::App* c, bool required) {
    auto* p = c->add_option("--p", o.p, "characteristic");
    if (required) p->required();
    c->add_option("--r", o.r, "extension degree")->capture_default_str();
  };

  auto* swarm_cmd = app.add_subcommand("swarm", "build a swarm and print its summary");
  field_opts(swarm_cmd, true);
  swarm_cmd->add_option("--guard", o.guard, "maximum vertex count");
  swarm_cmd->add_option("--dot", o.dot, "write Graphviz output");
  swarm_cmd->add_option("--out", o.out, "write the JSON summary");
  swarm_cmd->add_option("--cache-dir", o.cache_dir, "summary cache directory");

  auto* orbit_cmd = app.add_subcommand("orbit", "the jellyfish through one seed");
  field_opts(orbit_cmd, true);
  orbit_cmd->add_option("--a", o.a, "first coordinate")->required();
  orbit_cmd->add_option("--b", o.b, "second coordinate")->required();
  orbit_cmd->add_option("--dot", o.dot, "write Graphviz output");

  auto* curve_cmd = app.add_subcommand("curve", "Legendre curve data");
  field_opts(curve_cmd, true);
  curve_cmd->add_option("--lambda", o.lambda, "curve parameter")->required();
  curve_cmd->add_flag("--brute", o.brute, "also count points directly");
  curve_cmd->add_option("--guard", o.guard, "largest q for point enumeration");

  auto* classnum_cmd = app.add_subcommand("classnum", "class number and reduced forms");
  classnum_cmd->add_option("--D", o.D, "discriminant")->required();
  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz class number H(N)");
  hurwitz_cmd->add_option("--N", o.N, "argument, counts discriminant -N")->required();
  auto* h2_cmd = app.add_subcommand("h2", "order of a prime form above 2");
  h2_cmd->add_option("--D", o.D, "discriminant, 1 mod 8")->required();
  auto* hcp_cmd = app.add_subcommand("hcp", "Hilbert class polynomial");
  hcp_cmd->add_option("--D", o.D, "discriminant")->required();
  hcp_cmd->add_option("--guard", o.guard, "maximum degree");

  auto* hyper_cmd = app.add_subcommand("hyper", "hypergeometric checks");
  auto* hyper_check = hyper_cmd->add_subcommand("check", "trace identity, integral identity and invariance sweeps");
  hyper_cmd->require_subcommand(1);
  field_opts(hyper_check, true);
  hyper_check->add_option("--tol", o.tol, "absolute tolerance");
  hyper_check->add_option("--out", o.out, "write the JSON report");

  auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
  verify_cmd->require_subcommand(1);
  auto* v_thm1 = verify_cmd->add_subcommand("thm1", "class-number sum identity");
  v_thm1->add_option("--qmin", o.qmin)->capture_default_str();
  v_thm1->add_option("--qmax", o.qmax, "default 2000");
  auto* v_thm3 = verify_cmd->add_subcommand("thm3", "jellyfish size law");
  field_opts(v_thm3, false);
  v_thm3->add_flag("--table", o.table, "print the class table");
  v_thm3->add_option("--qmin", o.qmin)->capture_default_str();
  v_thm3->add_option("--qmax", o.qmax, "sweep bound when --p is absent, default 300");
  v_thm3->add_option("--guard", o.guard, "class polynomial degree guard");
  auto* v_hyper = verify_cmd->add_subcommand("hyper", "hypergeometric suite");
  field_opts(v_hyper, false);
  v_hyper->add_option("--tol", o.tol, "absolute tolerance");
  auto* v_structure = verify_cmd->add_subcommand("structure", "swarm shape and count checks");
  field_opts(v_structure, false);
  v_structure->add_option("--qmin", o.qmin)->capture_default_str();
  v_structure->add_option("--qmax", o.qmax, "sweep bound when --p is absent, default 200");
  for (auto* c : {v_thm1, v_thm3, v_hyper, v_structure}) c->add_option("--out", o.out, "write the JSON report");

  auto* tables_cmd = app.add_subcommand("tables", "reproduce reference tables");
  std::string which;
  tables_cmd->add_option("which", which, "fig3, fig4 or ex271")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "ex271"}));
  tables_cmd->add_option("--cache-dir", o.cache_dir, "summary cache directory");
  tables_cmd->add_option("--out", o.out, "write the table");
  tables_cmd->add_option("--guard", o.guard, "maximum vertex count");

  auto* pi_cmd = app.add_subcommand("pi", "AGM approximations of pi");
  pi_cmd->add_option("--iters", o.iters)->capture_default_str();
  pi_cmd->add_option("--digits", o.digits)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*swarm_cmd) return cmd_swarm(o);
    if (*orbit_cmd) return cmd_orbit(o);
    if (*curve_cmd) return cmd_curve(o);
    if (*classnum_cmd) return cmd_classnum(o);
    if (*hurwitz_cmd) return cmd_hurwitz(o);
    if (*h2_cmd) return cmd_h2(o);
    if (*hcp_cmd) return cmd_hcp(o);
    if (*hyper_check) return cmd_hyper(o);
    if (*v_thm1) return cmd_verify_thm1(o);
    if (*v_thm3) return cmd_verify_thm3(o);
    if (*v_hyper) return cmd_verify_hyper(o);
    if (*v_structure) return cmd_verify_structure(o);
    if (*tables_cmd) return cmd_tables(which, o);
    if (*pi_cmd) return cmd_pi(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NoCandidateMatched:
      case ErrorCode::PrecisionExhausted:
      case ErrorCode::IoError:
        return kFail;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
