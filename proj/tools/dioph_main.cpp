// dioph: command-line front end for the word-ball, polynomial-family,
// root-count, covering and series computations.
//
// Exit status: 0 on success, 1 on invalid input or runtime errors, 2 when a
// checked bound fails at the requested parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/dioph.hpp"
#include "dioph/parallel.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// JSON has no inf/nan; such values are written as strings.
json num(double v) {
  if (std::isfinite(v)) return v;
  return fmt(v);
}

json complex_json(dioph::Complex z) { return json::array({num(z.real()), num(z.imag())}); }

json poly_json(const dioph::IntPoly& p) {
  json c = json::array();
  for (auto v : p.coeffs()) c.push_back(v);
  return c;
}

struct Global {
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;
};

// Writes to the named file, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

json constants_json(const dioph::CoveringConstants& c) {
  return json{{"r", num(c.r)},
              {"a", num(c.a)},
              {"log_A", num(c.log_A)},
              {"log_B", num(c.log_B)},
              {"C_r", num(c.c_r)},
              {"c", num(c.c_region)},
              {"c_gap", num(c.c_gap)},
              {"C", num(c.C)}};
}

json header(const std::string& command, json params, const Global& g,
            const dioph::CoveringConstants& constants) {
  json config{{"command", command}, {"seed", g.seed}};
  for (auto& [k, v] : params.items()) config[k] = v;
  config["constants"] = constants_json(constants);
  return config;
}

std::string json_document(const json& config, const json& results) {
  json doc{{"config", config}, {"version", dioph::kVersion}, {"results", results}};
  return doc.dump(2) + "\n";
}

std::string csv_header(const json& config) {
  std::ostringstream os;
  os << "# dioph " << dioph::kVersion << "\n";
  os << "# config " << config.dump() << "\n";
  return os.str();
}

dioph::RootOptions root_options(const Global& g) {
  dioph::RootOptions o;
  o.seed = g.seed;
  return o;
}

// ---------------------------------------------------------------- ball

struct BallArgs {
  int l = 0;
  std::string x;
  std::string json_path;
};

int run_ball(const BallArgs& a, const Global& g) {
  dioph::BallOptions bo;
  bo.threads = g.threads;
  const dioph::Ball ball = dioph::enumerate_ball(a.l, bo);

  json params{{"l", a.l}};
  if (!a.x.empty()) params["x"] = a.x;
  const json config = header("ball", params, g, dioph::CoveringConstants::defaults());

  json results{{"l", a.l},
               {"distinct_elements", ball.size()},
               {"words", dioph::word_count(a.l)}};
  json per_l = json::array();
  for (int m = 0; m <= a.l; ++m) per_l.push_back(ball.count_within(m));
  results["distinct_by_length"] = per_l;

  if (!a.x.empty()) {
    const auto exact = dioph::GaussianRational::parse(a.x);
    dioph::GapOptions gap;
    gap.exact_x = exact;
    const dioph::Complex x = exact.to_complex();
    const auto profile = dioph::gap_profile(ball, x, gap);
    const auto& s = profile.back();
    results["x"] = complex_json(x);
    results["d_l"] = num(s.d_l);
    results["argmin_word"] = json::parse(dioph::to_json(s.argmin_word));
    results["relation"] = s.relation_witness.has_value();
    results["relation_exact"] = s.relation_exact;
    if (s.relation_witness) {
      results["relation_witness"] = json::parse(dioph::to_json(*s.relation_witness));
    }
    json gaps = json::array();
    for (const auto& p : profile) gaps.push_back(num(p.d_l));
    results["d_by_length"] = gaps;
  }
  emit(a.json_path, json_document(config, results));
  return kExitOk;
}

// ---------------------------------------------------------------- beta

struct BetaArgs {
  std::string x;
  int lmax = 0;
  std::string csv_path;
};

int run_beta(const BetaArgs& a, const Global& g) {
  const auto exact = dioph::GaussianRational::parse(a.x);
  dioph::GapOptions gap;
  gap.exact_x = exact;
  dioph::BallOptions bo;
  bo.threads = g.threads;
  const auto report = dioph::beta_profile(exact.to_complex(), a.lmax, gap, bo);

  const json config = header("beta", json{{"x", a.x}, {"lmax", a.lmax}}, g,
                             dioph::CoveringConstants::defaults());
  std::ostringstream os;
  os << csv_header(config);
  os << "l,count,d_l,beta_l,words,relation\n";
  for (const auto& s : report.per_l) {
    const auto li = static_cast<std::size_t>(s.l);
    os << s.l << ',' << s.distinct_elements << ',' << fmt(s.d_l) << ','
       << fmt(report.beta_l[li]) << ',' << s.words << ','
       << (s.relation_witness ? (s.relation_exact ? "exact" : "numeric") : "none") << '\n';
  }
  os << "# beta_estimate=" << fmt(report.beta_estimate)
     << " beta_estimate_words=" << fmt(report.beta_estimate_words)
     << " relation_found=" << (report.relation_found ? "true" : "false") << '\n';
  emit(a.csv_path, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  int l = 0;
  bool count_only = false;
  std::string out_path;
  int cap = dioph::kDefaultFamilyCap;
};

int run_family(const FamilyArgs& a, const Global& g) {
  json params{{"l", a.l}, {"count_only", a.count_only}, {"cap", a.cap}};
  const json config = header("family", params, g, dioph::CoveringConstants::defaults());

  dioph::FamilyEnumerator it(a.l, a.cap);
  std::uint64_t count = 0;
  std::ostringstream lines;
  if (!a.count_only) lines << json{{"config", config}, {"version", dioph::kVersion}}.dump() << '\n';
  while (auto p = it.next()) {
    ++count;
    if (!a.count_only) lines << json{{"coeffs", poly_json(*p)}}.dump() << '\n';
  }
  const dioph::BigInt lattice = dioph::count_l1_ball(2 * a.l + 1, a.l);
  const dioph::BigInt stated = dioph::family_size_bound(a.l);
  dioph::BigInt hundred = 1;
  for (int i = 0; i < a.l; ++i) hundred *= 100;
  const bool ok = lattice == count && lattice <= stated && stated <= hundred;

  if (a.count_only) {
    json results{{"l", a.l},
                 {"count", count},
                 {"lattice_count", lattice.str()},
                 {"stated_bound", stated.str()},
                 {"hundred_pow_l", hundred.str()},
                 {"pass", ok}};
    emit(a.out_path, json_document(config, results));
  } else {
    emit(a.out_path, lines.str());
  }
  if (!ok) {
    std::cerr << "family: count " << count << " vs lattice " << lattice.str()
              << " vs bound " << stated.str() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- jensen

struct JensenArgs {
  int l = 0;
  double r = 0.5;
  std::optional<double> cr;
  std::string csv_path;
  int cap = dioph::kDefaultFamilyCap;
};

int run_jensen(const JensenArgs& a, const Global& g) {
  const double cr = a.cr.value_or(dioph::default_c_r(a.r));
  auto constants = dioph::CoveringConstants::defaults(std::min(a.r, 0.5));
  constants.r = a.r;
  constants.c_r = cr;
  const json config =
      header("jensen", json{{"l", a.l}, {"r", num(a.r)}, {"cr", num(cr)}}, g, constants);

  std::vector<dioph::IntPoly> family;
  for (auto& p : dioph::enumerate_family(a.l, a.cap)) {
    if (!p.is_zero()) family.push_back(std::move(p));
  }
  struct Row {
    dioph::JensenCheck j;
    dioph::MahlerCheck m;
    double recon = 0.0;
  };
  std::vector<Row> rows(family.size());
  const auto opts = root_options(g);
  dioph::parallel_blocks(family.size(), dioph::resolve_threads(g.threads),
                         [&](std::size_t b, std::size_t e, unsigned) {
                           for (std::size_t i = b; i < e; ++i) {
                             const auto roots = dioph::find_roots(family[i], opts);
                             rows[i].j = dioph::jensen_bound_check(family[i], roots, a.r, cr);
                             rows[i].m = dioph::mahler_check(family[i], roots, a.l);
                             rows[i].recon = dioph::reconstruction_error(family[i], roots);
                           }
                         });

  std::ostringstream os;
  os << csv_header(config);
  os << "poly-id,poly,degree,max-coeff,large-roots,witness-Cr,pass,chain,mahler,mahler-pass,"
        "recon-error\n";
  std::size_t failures = 0;
  double max_witness = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& r = rows[i];
    const bool recon_ok = r.recon <= 1e-8;
    if (!r.j.pass || !r.j.chain_holds || !r.m.pass || !recon_ok) ++failures;
    max_witness = std::max(max_witness, r.j.c_r_witness);
    os << i << ",\"" << family[i].to_string() << "\"," << family[i].degree() << ','
       << r.j.max_coeff << ',' << r.j.large_root_count << ',' << fmt(r.j.c_r_witness) << ','
       << (r.j.pass ? "true" : "false") << ',' << (r.j.chain_holds ? "true" : "false") << ','
       << fmt(r.m.mahler) << ',' << (r.m.pass ? "true" : "false") << ',' << fmt(r.recon)
       << '\n';
  }
  os << "# polynomials=" << family.size() << " failures=" << failures
     << " max_witness_Cr=" << fmt(max_witness) << '\n';
  emit(a.csv_path, os.str());
  return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- cover

struct CoverArgs {
  int l = 0;
  int k = 1;
  double r = 0.5;
  double a = 4.0;
  std::optional<double> A;
  std::optional<double> log_A;
  std::optional<double> B;
  std::optional<double> log_B;
  bool separation = false;
  bool members_only = false;
  std::string json_path;
  int cap = dioph::kDefaultFamilyCap;
};

int run_cover(const CoverArgs& a, const Global& g) {
  auto constants = dioph::CoveringConstants::defaults(a.r, a.a);
  if (a.B) constants = constants.with_log_B(std::log(*a.B));
  if (a.log_B) constants = constants.with_log_B(*a.log_B);
  if (a.A) constants = constants.with_log_A(std::log(*a.A));
  if (a.log_A) constants = constants.with_log_A(*a.log_A);
  if (!(constants.log_A > 0.0)) throw dioph::DomainError("--A must exceed 1");
  if (!(constants.log_B > 0.0)) throw dioph::DomainError("--B must exceed 1");

  json params{{"l", a.l}, {"k", a.k}, {"r", num(a.r)}, {"a", num(a.a)},
              {"separation", a.separation}, {"members_only", a.members_only}};
  const json config = header("cover", params, g, constants);

  dioph::ClassifyOptions co;
  co.sublevel.roots = root_options(g);
  co.family_cap = a.cap;
  co.threads = g.threads;
  co.keep_verdicts = true;
  const auto ex = dioph::classify_exceptional(a.l, a.k, constants, co);

  json verdicts = json::array();
  for (const auto& pv : ex.verdicts) {
    if (a.members_only && pv.verdict.coverable) continue;
    json v{{"poly", poly_json(pv.p)},
           {"coverable", pv.verdict.coverable},
           {"disks", pv.verdict.disks_used},
           {"witness", pv.verdict.witness ? complex_json(*pv.verdict.witness) : json(nullptr)},
           {"certified", pv.verdict.certified},
           {"ambiguous", pv.verdict.ambiguous}};
    verdicts.push_back(std::move(v));
  }
  json results{{"l", ex.l},
               {"k", ex.k},
               {"disk_radius", num(constants.disk_radius(a.l, a.k))},
               {"max_disks", 2 * a.l},
               {"family_size", ex.family_size},
               {"count_with_zero", ex.count_with_zero},
               {"count_without_zero", ex.count_without_zero},
               {"ambiguous", ex.ambiguous},
               {"C", num(ex.C)},
               {"bound", num(ex.bound)},
               {"within_bound", ex.within_bound},
               {"only_zero_expected", ex.only_zero_expected},
               {"only_zero_holds", ex.only_zero_holds}};
  bool violated = !ex.within_bound || (ex.only_zero_expected && !ex.only_zero_holds);

  if (a.separation) {
    const auto sw = dioph::separation_sweep(a.l, a.k, constants, constants.log_B, 9, a.cap);
    auto pair_json = [](const dioph::SeparationPair& sp) {
      return json{{"region", sp.region},
                  {"p", poly_json(sp.p)},
                  {"q", poly_json(sp.q)},
                  {"gap", num(sp.report.measured)},
                  {"note", sp.report.note}};
    };
    json thr = json::array();
    for (const auto& sp : sw.threshold_exceptions) thr.push_back(pair_json(sp));
    json unex = json::array();
    for (const auto& sp : sw.unexplained_failures) unex.push_back(pair_json(sp));
    results["separation"] = json{{"log_B", num(sw.log_B)},
                                 {"regions", sw.regions},
                                 {"largest_class", sw.largest_class},
                                 {"pairs_checked", sw.pairs_checked},
                                 {"pairs_passed", sw.pairs_passed},
                                 {"threshold_exceptions", thr},
                                 {"unexplained_failures", unex}};
    if (!sw.unexplained_failures.empty()) violated = true;
  }
  results["verdicts"] = std::move(verdicts);
  emit(a.json_path, json_document(config, results));
  return violated ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- tail

struct TailArgs {
  double alpha = 1.0;
  double a = 8.0;
  int n = 1;
  int lmax = 60;
  double C = 64.0;
  bool partial = false;
  std::string json_path;
};

int run_tail(const TailArgs& a, const Global& g) {
  dioph::HausdorffSumParams p;
  p.alpha = a.alpha;
  p.a = a.a;
  p.n_start = a.n;
  p.l_max = a.lmax;
  p.C = a.C;
  p.mode = a.partial ? dioph::TailMode::kPartialOnly : dioph::TailMode::kCertified;
  const auto t = dioph::hausdorff_tail(p);

  json params{{"alpha", num(a.alpha)}, {"a", num(a.a)}, {"n", a.n},
              {"lmax", a.lmax},        {"C", num(a.C)}, {"partial", a.partial}};
  const json config = header("tail", params, g, dioph::CoveringConstants::defaults());
  json results{{"partial_sum", num(t.partial_sum)},
               {"tail_bound", num(t.tail_bound)},
               {"total", num(t.total)},
               {"ratio", num(t.ratio)},
               {"certified", t.certified}};
  emit(a.json_path, json_document(config, results));
  return std::isfinite(t.total) ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::vector<double> rect;
  double step = 0.0;
  int l = 0;
  double A = 2.0;
  std::optional<double> r;
  std::vector<double> thresholds{1.0};
  std::string csv_path;
};

int run_scan(const ScanArgs& a, const Global& g) {
  dioph::GridSpec grid{a.rect[0], a.rect[1], a.rect[2], a.rect[3], a.step};
  dioph::ScanOptions so;
  so.r = a.r;
  so.threads = g.threads;
  so.ball.threads = g.threads;
  const auto scan = dioph::diophantine_scan(grid, a.l, a.A, so);
  const auto boxes = dioph::box_counting_estimate(scan, a.thresholds);

  json rect = json::array();
  for (double v : a.rect) rect.push_back(num(v));
  json thresholds = json::array();
  for (double v : a.thresholds) thresholds.push_back(num(v));
  json params{{"rect", rect}, {"step", num(a.step)}, {"l", a.l}, {"A", num(a.A)},
              {"thresholds", thresholds}};
  if (a.r) params["r"] = num(*a.r);
  const json config = header("scan", params, g, dioph::CoveringConstants::defaults());

  std::ostringstream os;
  os << csv_header(config);
  os << "re,im,l,d_l,margin,relation\n";
  for (const auto& pt : scan.points) {
    os << fmt(pt.x.real()) << ',' << fmt(pt.x.imag()) << ',' << pt.l << ',' << fmt(pt.d_l)
       << ',' << fmt(pt.margin) << ',' << (pt.relation ? "true" : "false") << '\n';
  }
  for (const auto& b : boxes) {
    os << "# box-counting (heuristic) threshold=" << fmt(b.threshold) << " sizes=";
    for (std::size_t i = 0; i < b.box_sizes.size(); ++i) {
      os << (i ? ";" : "") << fmt(b.box_sizes[i]);
    }
    os << " counts=";
    for (std::size_t i = 0; i < b.counts.size(); ++i) os << (i ? ";" : "") << b.counts[i];
    os << " slope=" << (b.slope ? fmt(*b.slope) : "omitted") << '\n';
  }
  emit(a.csv_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word balls, polynomial families and covering bounds for the affine pair "
               "(diag(x, 1), unit translation)"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized starting points");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
  app.set_version_flag("--version", std::string(dioph::kVersion));

  BallArgs ball;
  auto* c_ball = app.add_subcommand("ball", "Enumerate W_l and optionally compute d_l(x)");
  c_ball->add_option("--l", ball.l, "Word length")->required()->check(CLI::Range(0, 16));
  c_ball->add_option("--x", ball.x, "Parameter RE,IM (exact decimal)");
  c_ball->add_option("--json", ball.json_path, "Output file (default stdout)");

  BetaArgs beta;
  auto* c_beta = app.add_subcommand("beta", "Exponent profile beta_l at x");
  c_beta->add_option("--x", beta.x, "Parameter RE,IM (exact decimal)")->required();
  c_beta->add_option("--lmax", beta.lmax, "Largest word length")->required()->check(CLI::Range(1, 16));
  c_beta->add_option("--csv", beta.csv_path, "Output file (default stdout)");

  FamilyArgs fam;
  auto* c_fam = app.add_subcommand("family", "Enumerate or count the polynomial family P_l");
  c_fam->add_option("--l", fam.l, "Family index")->required()->check(CLI::Range(0, 16));
  c_fam->add_flag("--count-only", fam.count_only, "Report counts only");
  c_fam->add_option("--out", fam.out_path, "Output file (default stdout)");
  c_fam->add_option("--cap", fam.cap, "Largest permitted l")->check(CLI::Range(0, 16));

  JensenArgs jen;
  auto* c_jen = app.add_subcommand("jensen", "Large-root counts and Mahler measures over P_l");
  c_jen->add_option("--l", jen.l, "Family index")->required()->check(CLI::Range(1, 16));
  c_jen->add_option("--r", jen.r, "Annulus parameter r")->check(CLI::PositiveNumber);
  c_jen->add_option("--cr", jen.cr, "Root-count constant C_r")->check(CLI::NonNegativeNumber);
  c_jen->add_option("--csv", jen.csv_path, "Output file (default stdout)");
  c_jen->add_option("--cap", jen.cap, "Largest permitted l")->check(CLI::Range(0, 16));

  CoverArgs cov;
  auto* c_cov = app.add_subcommand("cover", "Classify P_l by disk coverability of sublevel sets");
  c_cov->add_option("--l", cov.l, "Family index")->required()->check(CLI::Range(1, 16));
  c_cov->add_option("--k", cov.k, "Cluster index k")->required()->check(CLI::Range(1, 64));
  c_cov->add_option("--r", cov.r, "Annulus parameter r, 0 < r < 1")->check(CLI::Range(0.0, 1.0));
  c_cov->add_option("--a", cov.a, "Disk-radius exponent a > 1")->check(CLI::PositiveNumber);
  auto* o_A = c_cov->add_option("--A", cov.A, "Sublevel threshold A > 1");
  c_cov->add_option("--log-A", cov.log_A, "Natural log of A")->excludes(o_A);
  auto* o_B = c_cov->add_option("--B", cov.B, "Region threshold B > 1");
  c_cov->add_option("--log-B", cov.log_B, "Natural log of B")->excludes(o_B);
  c_cov->add_flag("--separation", cov.separation, "Also check coefficient separation");
  c_cov->add_flag("--members-only", cov.members_only, "Write verdicts of members only");
  c_cov->add_option("--json", cov.json_path, "Output file (default stdout)");
  c_cov->add_option("--cap", cov.cap, "Largest permitted l")->check(CLI::Range(0, 16));

  TailArgs tail;
  auto* c_tail = app.add_subcommand("tail", "Covering series bound for the Hausdorff measure");
  c_tail->add_option("--alpha", tail.alpha, "Dimension alpha in (0, 1]")->check(CLI::Range(0.0, 1.0));
  c_tail->add_option("--a", tail.a, "Exponent a > 1")->check(CLI::PositiveNumber);
  c_tail->add_option("--n", tail.n, "First l of the sum")->check(CLI::PositiveNumber);
  c_tail->add_option("--lmax", tail.lmax, "Last explicitly summed l")->check(CLI::PositiveNumber);
  c_tail->add_option("--C", tail.C, "Class-count constant")->check(CLI::PositiveNumber);
  c_tail->add_flag("--partial", tail.partial, "Partial sum only, no certified tail");
  c_tail->add_option("--json", tail.json_path, "Output file (default stdout)");

  ScanArgs sc;
  auto* c_scan = app.add_subcommand("scan", "Scan d_l A^l over a parameter rectangle");
  c_scan->add_option("--rect", sc.rect, "x0,y0,x1,y1")->required()->delimiter(',')->expected(4);
  c_scan->add_option("--step", sc.step, "Grid step")->required()->check(CLI::PositiveNumber);
  c_scan->add_option("--l", sc.l, "Word length")->required()->check(CLI::Range(0, 16));
  c_scan->add_option("--A", sc.A, "Threshold base A")->check(CLI::PositiveNumber);
  c_scan->add_option("--r", sc.r, "Require 1 + r <= |x| <= 1/r")->check(CLI::Range(0.0, 1.0));
  c_scan->add_option("--thresholds", sc.thresholds, "Box-counting margin thresholds")
      ->delimiter(',');
  c_scan->add_option("--csv", sc.csv_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*c_ball) return run_ball(ball, g);
    if (*c_beta) return run_beta(beta, g);
    if (*c_fam) return run_family(fam, g);
    if (*c_jen) return run_jensen(jen, g);
    if (*c_cov) return run_cover(cov, g);
    if (*c_tail) return run_tail(tail, g);
    if (*c_scan) return run_scan(sc, g);
  } catch (const dioph::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << " (estimated " << e.estimated_count() << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
