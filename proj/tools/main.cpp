// pseudoquot command-line tool. Everything goes through the C API in
// pseudoquot.h; this file only parses flags, moves bytes, and formats
// output (floats at 17 significant digits, CSV with LF endings, JSON with
// fixed key order).

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pseudoquot.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void die(pq_status status) {
  std::fprintf(stderr, "error: %s: %s\n", pq_status_name(status), pq_last_error());
  std::exit(status == PQ_ENOMEM || status == PQ_EIO ? kExitResource : kExitUsage);
}

void check(pq_status status) {
  if (status != PQ_OK) die(status);
}

// ---- run manifest -------------------------------------------------------

std::string iso8601_utc(std::time_t t) {
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\', out += c;
    else if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}

uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= uint8_t(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct Manifest {
  std::string path;  // empty = disabled
  std::string subcommand;
  std::vector<std::string> parameters;
  std::time_t started = 0;
  std::vector<std::string> outputs;

  void note_output(const std::string& file) {
    if (!path.empty()) outputs.push_back(file);
  }

  void write() const {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    out << "{\n  \"subcommand\": \"" << json_escape(subcommand) << "\",\n";
    out << "  \"parameters\": [";
    for (size_t i = 0; i < parameters.size(); ++i)
      out << (i ? ", " : "") << '"' << json_escape(parameters[i]) << '"';
    out << "],\n";
    out << "  \"artifact_version\": \"" << pq_version() << "\",\n";
    out << "  \"started\": \"" << iso8601_utc(started) << "\",\n";
    out << "  \"finished\": \"" << iso8601_utc(std::time(nullptr)) << "\",\n";
    out << "  \"outputs\": [";
    for (size_t i = 0; i < outputs.size(); ++i) {
      char digest[24];
      std::snprintf(digest, sizeof digest, "%016" PRIx64, fnv1a64_file(outputs[i]));
      out << (i ? ", " : "") << "{\"path\": \"" << json_escape(outputs[i])
          << "\", \"fnv1a64\": \"" << digest << "\"}";
    }
    out << "]\n}\n";
  }
};

Manifest g_manifest;
bool g_no_timing = false;

double shown_elapsed(double elapsed) { return g_no_timing ? 0.0 : elapsed; }

// ---- sieve cache --------------------------------------------------------

struct Sieve {
  pq_sieve* handle = nullptr;
  ~Sieve() { pq_sieve_free(handle); }
};

std::string cache_path_for(uint64_t limit) {
  const char* dir = std::getenv("PSEUDOQUOT_SIEVE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/lpfsieve_" + std::to_string(limit) + ".bin";
}

void acquire_sieve(uint64_t limit, Sieve& sieve) {
  std::string cached = cache_path_for(limit);
  if (!cached.empty()) {
    if (pq_sieve_load(cached.c_str(), &sieve.handle) == PQ_OK &&
        pq_sieve_limit(sieve.handle) == limit)
      return;
    pq_sieve_free(sieve.handle);
    sieve.handle = nullptr;
  }
  check(pq_sieve_build(limit, &sieve.handle));
}

// ---- CSV helpers ---------------------------------------------------------

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", path.c_str());
    std::exit(kExitResource);
  }
  g_manifest.note_output(path);
  return out;
}

// ---- sum/wsum ------------------------------------------------------------

struct SumOutput {
  std::string kind;
  uint64_t g = 0;
  bool has_g = true;
  int64_t a = 0;
  uint64_t limit = 0;
  pq_sum_report rep{};
};

void emit_sum(const SumOutput& s, bool as_json, const std::string& csv_path) {
  double abs_v = std::hypot(s.rep.re, s.rep.im);
  double elapsed = shown_elapsed(s.rep.elapsed_s);
  if (as_json) {
    std::printf("{\"kind\":\"%s\",\"g\":%" PRIu64 ",\"a\":%" PRId64
                ",\"limit\":%" PRIu64 ",\"re\":%s,\"im\":%s,\"abs\":%s,\"terms\":%" PRIu64
                ",\"elapsed_s\":%s}\n",
                s.kind.c_str(), s.g, s.a, s.limit, g17(s.rep.re).c_str(),
                g17(s.rep.im).c_str(), g17(abs_v).c_str(), s.rep.term_count,
                g17(elapsed).c_str());
  } else {
    std::printf("%s(a=%" PRId64 "; N=%" PRIu64 ")", s.kind.c_str(), s.a, s.limit);
    if (s.has_g) std::printf(" g=%" PRIu64, s.g);
    std::printf(": %s %s%si  |.|=%s  terms=%" PRIu64 "  %.3fs\n", g17(s.rep.re).c_str(),
                s.rep.im < 0 ? "-" : "+", g17(std::fabs(s.rep.im)).c_str(),
                g17(abs_v).c_str(), s.rep.term_count, elapsed);
  }
  if (!csv_path.empty()) {
    auto out = open_csv(csv_path);
    out << "kind,g,a,limit,re,im,abs,terms,elapsed_s\n";
    out << s.kind << ',' << s.g << ',' << s.a << ',' << s.limit << ',' << g17(s.rep.re)
        << ',' << g17(s.rep.im) << ',' << g17(abs_v) << ',' << s.rep.term_count << ','
        << g17(elapsed) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudoquot: exponential sums and censuses for pseudoprime quotients"};
  app.require_subcommand(1);

  unsigned threads = 0;
  std::string manifest_path;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this path");
  app.add_flag("--no-timing", g_no_timing, "report elapsed_s as 0 for byte-stable output");

  // frac ------------------------------------------------------------------
  auto* frac = app.add_subcommand("frac", "exact fractional part of one quotient");
  std::string frac_kind;
  uint64_t frac_g = 2, frac_n = 1;
  frac->add_option("--kind", frac_kind, "f, h, ftilde or htilde")->required();
  frac->add_option("--g", frac_g, "base g >= 1")->required();
  frac->add_option("--n", frac_n, "argument n >= 1")->required();

  // sum -------------------------------------------------------------------
  auto* sum = app.add_subcommand("sum", "single exponential sum over composite n");
  std::string sum_kind;
  uint64_t sum_g = 2, sum_limit = 2;
  int64_t sum_a = 1;
  bool sum_primes = false, sum_json = false;
  std::string sum_csv;
  sum->add_option("--kind", sum_kind, "S, Stilde, Topen or Ttildeopen")->required();
  sum->add_option("--g", sum_g, "base g >= 2")->required();
  sum->add_option("--a", sum_a, "nonzero frequency a")->required();
  sum->add_option("--limit", sum_limit, "range limit N")->required();
  sum->add_flag("--include-primes", sum_primes, "sum over primes as well");
  sum->add_flag("--json", sum_json, "print a JSON report");
  sum->add_option("--csv", sum_csv, "write a one-row CSV report to this path");

  // wsum ------------------------------------------------------------------
  auto* wsum = app.add_subcommand("wsum", "double exponential sum over composite n and units g");
  std::string wsum_kind;
  uint64_t wsum_limit = 2;
  int64_t wsum_a = 1;
  bool wsum_json = false;
  std::string wsum_csv;
  wsum->add_option("--kind", wsum_kind, "W or Wtilde")->required();
  wsum->add_option("--a", wsum_a, "nonzero frequency a")->required();
  wsum->add_option("--limit", wsum_limit, "range limit N")->required();
  wsum->add_flag("--json", wsum_json, "print a JSON report");
  wsum->add_option("--csv", wsum_csv, "write a one-row CSV report to this path");

  // discrepancy -------------------------------------------------------------
  auto* disc = app.add_subcommand("discrepancy", "star discrepancy of a quotient sequence");
  std::string disc_kind, disc_csv, disc_hist_csv;
  uint64_t disc_g = 2, disc_limit = 2, disc_eth = 0;
  uint32_t disc_bins = 0;
  disc->add_option("--kind", disc_kind, "f, h, ftilde or htilde")->required();
  disc->add_option("--g", disc_g, "base g >= 2")->required();
  disc->add_option("--limit", disc_limit, "range limit N")->required();
  disc->add_option("--et-H", disc_eth, "also compute the Erdos-Turan bound with H terms");
  disc->add_option("--bins", disc_bins, "histogram bin count");
  disc->add_option("--csv", disc_csv, "write N,d_star,et_bound,et_H to this path");
  disc->add_option("--hist-csv", disc_hist_csv, "write bin_lo,bin_hi,count to this path");

  // census ------------------------------------------------------------------
  auto* census = app.add_subcommand("census", "counting experiments");
  census->require_subcommand(1);
  uint64_t cs_x = 100, cs_y = 2, cs_z = 1, cs_g = 2, cs_limit = 100;
  double cs_delta = 0.5, cs_yreal = 2.0;
  std::string cs_csv, cs_params = "2,0.5,10";

  auto* cs_smooth = census->add_subcommand("smooth", "Psi(x,y) smooth-number count");
  cs_smooth->add_option("--x", cs_x)->required();
  cs_smooth->add_option("--y", cs_y)->required();
  cs_smooth->add_option("--csv", cs_csv);

  auto* cs_rho = census->add_subcommand("rho", "count of n with small squarefree part");
  cs_rho->add_option("--x", cs_x)->required();
  cs_rho->add_option("--y", cs_yreal)->required();
  cs_rho->add_option("--csv", cs_csv);

  auto* cs_gamma = census->add_subcommand("gamma", "count of composite n with gamma(n) > z");
  cs_gamma->add_option("--x", cs_x)->required();
  cs_gamma->add_option("--z", cs_z)->required();
  cs_gamma->add_option("--csv", cs_csv);

  auto* cs_primes = census->add_subcommand("primes", "prime classification census");
  cs_primes->add_option("--x", cs_x)->required();
  cs_primes->add_option("--g", cs_g)->required();
  cs_primes->add_option("--params", cs_params, "c1,theta,beta (default 2,0.5,10)");
  cs_primes->add_option("--csv", cs_csv);

  auto* cs_lpf = census->add_subcommand("lpf-interval", "count of n with P(n) in (y, y(1+delta)]");
  cs_lpf->add_option("--x", cs_x)->required();
  cs_lpf->add_option("--y", cs_y)->required();
  cs_lpf->add_option("--delta", cs_delta)->required();
  cs_lpf->add_option("--csv", cs_csv);

  auto* cs_psp = census->add_subcommand("psp", "base-g Fermat pseudoprime census");
  cs_psp->add_option("--limit", cs_limit)->required();
  cs_psp->add_option("--g", cs_g)->required();
  cs_psp->add_option("--csv", cs_csv);

  auto* cs_car = census->add_subcommand("carmichael", "Carmichael numbers by Korselt");
  cs_car->add_option("--limit", cs_limit)->required();
  cs_car->add_option("--csv", cs_csv);

  auto* cs_tset = census->add_subcommand("tset", "lower-bound construction membership");
  cs_tset->add_option("--limit", cs_limit)->required();
  cs_tset->add_option("--g", cs_g)->required();
  cs_tset->add_option("--csv", cs_csv);

  // sieve ------------------------------------------------------------------
  auto* sieve_cmd = app.add_subcommand("sieve", "build, save or validate an lpf/spf sieve");
  uint64_t sv_limit = 0;
  std::string sv_save, sv_load;
  sieve_cmd->add_option("--limit", sv_limit, "table limit");
  sieve_cmd->add_option("--save", sv_save, "write the cache file to this path");
  sieve_cmd->add_option("--load", sv_load, "load and validate a cache file");

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
  std::string vf_suite = "all";
  bool vf_list = false;
  verify->add_option("--suite", vf_suite, "suite name or 'all'");
  verify->add_flag("--list", vf_list, "list suite names and exit");

  // Let global flags (--threads, --manifest, --no-timing) appear after the
  // subcommand name as well.
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  }

  g_manifest.path = manifest_path;
  g_manifest.started = std::time(nullptr);
  for (int i = 1; i < argc; ++i) g_manifest.parameters.push_back(argv[i]);
  if (!app.get_subcommands().empty())
    g_manifest.subcommand = app.get_subcommands().front()->get_name();

  static const std::map<std::string, pq_quotient_kind> kQuotients = {
      {"f", PQ_QUOT_F}, {"h", PQ_QUOT_H}, {"ftilde", PQ_QUOT_FTILDE}, {"htilde", PQ_QUOT_HTILDE}};
  static const std::map<std::string, pq_sum_kind> kSums = {
      {"S", PQ_SUM_S}, {"Stilde", PQ_SUM_STILDE}, {"Topen", PQ_SUM_TOPEN},
      {"Ttildeopen", PQ_SUM_TTILDEOPEN}};
  // Exponential sum family matching each quotient sequence.
  static const std::map<std::string, pq_sum_kind> kSumOfQuotient = {
      {"f", PQ_SUM_TOPEN}, {"h", PQ_SUM_S}, {"ftilde", PQ_SUM_TTILDEOPEN},
      {"htilde", PQ_SUM_STILDE}};

  if (frac->parsed()) {
    auto it = kQuotients.find(frac_kind);
    if (it == kQuotients.end()) {
      std::fprintf(stderr, "usage error: unknown quotient kind '%s'\n", frac_kind.c_str());
      return kExitUsage;
    }
    pq_unit_frac f;
    check(pq_frac_quotient(it->second, frac_g, frac_n, nullptr, &f));
    double re, im;
    pq_unit_e(f, &re, &im);
    (void)im;
    std::printf("%" PRIu64 "/%" PRIu64 "\n%s\n", f.num, f.den,
                g17(double(f.num) / double(f.den)).c_str());
  }

  if (sum->parsed()) {
    auto it = kSums.find(sum_kind);
    if (it == kSums.end()) {
      std::fprintf(stderr, "usage error: unknown sum kind '%s'\n", sum_kind.c_str());
      return kExitUsage;
    }
    Sieve sieve;
    acquire_sieve(sum_limit, sieve);
    SumOutput out;
    out.kind = sum_kind;
    out.g = sum_g;
    out.a = sum_a;
    out.limit = sum_limit;
    check(pq_single_sum(it->second, sum_g, sum_a, sum_limit, sieve.handle,
                        sum_primes ? 1 : 0, threads, &out.rep));
    emit_sum(out, sum_json, sum_csv);
  }

  if (wsum->parsed()) {
    pq_wsum_kind kind;
    if (wsum_kind == "W")
      kind = PQ_WSUM_W;
    else if (wsum_kind == "Wtilde")
      kind = PQ_WSUM_WTILDE;
    else {
      std::fprintf(stderr, "usage error: unknown wsum kind '%s'\n", wsum_kind.c_str());
      return kExitUsage;
    }
    Sieve sieve;
    acquire_sieve(wsum_limit, sieve);
    SumOutput out;
    out.kind = wsum_kind;
    out.has_g = false;
    out.a = wsum_a;
    out.limit = wsum_limit;
    check(pq_double_sum(kind, wsum_a, wsum_limit, sieve.handle, threads, &out.rep));
    emit_sum(out, wsum_json, wsum_csv);
  }

  if (disc->parsed()) {
    auto it = kQuotients.find(disc_kind);
    if (it == kQuotients.end()) {
      std::fprintf(stderr, "usage error: unknown quotient kind '%s'\n", disc_kind.c_str());
      return kExitUsage;
    }
    Sieve sieve;
    acquire_sieve(disc_limit, sieve);
    pq_frac_seq* seq = nullptr;
    check(pq_frac_seq_build(it->second, disc_g, disc_limit, sieve.handle, 0, &seq));
    size_t n_points = pq_frac_seq_size(seq);
    double d_star = 0.0;
    check(pq_frac_seq_dstar(seq, &d_star));

    bool has_et = disc_eth > 0;
    double et_bound = 0.0;
    if (has_et) {
      std::vector<double> mags(disc_eth);
      for (uint64_t a = 1; a <= disc_eth; ++a) {
        pq_sum_report rep;
        check(pq_single_sum(kSumOfQuotient.at(disc_kind), disc_g, int64_t(a), disc_limit,
                            sieve.handle, 0, threads, &rep));
        mags[a - 1] = std::hypot(rep.re, rep.im);
      }
      check(pq_erdos_turan_bound(mags.data(), mags.size(), n_points, &et_bound));
    }

    std::printf("points=%zu d_star=%s", n_points, g17(d_star).c_str());
    if (has_et)
      std::printf(" et_bound=%s et_H=%" PRIu64, g17(et_bound).c_str(), disc_eth);
    std::printf("\n");

    if (!disc_csv.empty()) {
      auto out = open_csv(disc_csv);
      out << "N,d_star,et_bound,et_H\n" << n_points << ',' << g17(d_star) << ',';
      if (has_et)
        out << g17(et_bound) << ',' << disc_eth;
      else
        out << ',';
      out << '\n';
    }
    if (disc_bins > 0) {
      std::vector<uint64_t> counts(disc_bins);
      check(pq_frac_seq_histogram(seq, disc_bins, counts.data()));
      if (!disc_hist_csv.empty()) {
        auto out = open_csv(disc_hist_csv);
        out << "bin_lo,bin_hi,count\n";
        for (uint32_t b = 0; b < disc_bins; ++b)
          out << g17(double(b) / disc_bins) << ',' << g17(double(b + 1) / disc_bins) << ','
              << counts[b] << '\n';
      } else {
        for (uint32_t b = 0; b < disc_bins; ++b)
          std::printf("bin %u [%.4f,%.4f): %" PRIu64 "\n", b, double(b) / disc_bins,
                      double(b + 1) / disc_bins, counts[b]);
      }
    }
    pq_frac_seq_free(seq);
  }

  if (census->parsed()) {
    if (cs_smooth->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_x, sieve);
      uint64_t count;
      double u, ref;
      check(pq_census_psi_smooth(sieve.handle, cs_x, cs_y, &count, &u, &ref));
      std::printf("Psi(%" PRIu64 ",%" PRIu64 ") = %" PRIu64 "  u=%s  x*u^-u=%s\n", cs_x,
                  cs_y, count, g17(u).c_str(), g17(ref).c_str());
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "x,y,count,u,reference\n"
            << cs_x << ',' << cs_y << ',' << count << ',' << g17(u) << ',' << g17(ref)
            << '\n';
      }
    } else if (cs_rho->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_x, sieve);
      uint64_t count;
      double cmp;
      check(pq_census_rho_exceptional(sieve.handle, cs_x, cs_yreal, &count, &cmp));
      std::printf("#{n<=%" PRIu64 ": rho(n)<=n/%s} = %" PRIu64 "  x/sqrt(y)=%s\n", cs_x,
                  g17(cs_yreal).c_str(), count, g17(cmp).c_str());
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "x,y,count,comparator\n"
            << cs_x << ',' << g17(cs_yreal) << ',' << count << ',' << g17(cmp) << '\n';
      }
    } else if (cs_gamma->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_x, sieve);
      uint64_t count;
      double cmp;
      check(pq_census_gamma_exceedance(sieve.handle, cs_x, cs_z, 1, &count, &cmp));
      std::printf("#{composite n<=%" PRIu64 ": gamma(n)>%" PRIu64 "} = %" PRIu64
                  "  comparator=%s\n",
                  cs_x, cs_z, count, g17(cmp).c_str());
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "x,z,composite_only,count,comparator\n"
            << cs_x << ',' << cs_z << ",1," << count << ',' << g17(cmp) << '\n';
      }
    } else if (cs_primes->parsed()) {
      double c1, theta, beta;
      if (std::sscanf(cs_params.c_str(), "%lf,%lf,%lf", &c1, &theta, &beta) != 3) {
        std::fprintf(stderr, "usage error: --params expects c1,theta,beta\n");
        return kExitUsage;
      }
      Sieve sieve;
      acquire_sieve(cs_x, sieve);
      pq_prime_census* pc = nullptr;
      check(pq_census_prime_class(sieve.handle, cs_x, cs_g, {c1, theta, beta}, &pc));
      uint64_t n_primes, n_skipped, n_q, n_r;
      pq_prime_census_summary(pc, &n_primes, &n_skipped, &n_q, &n_r);
      std::printf("primes<=%" PRIu64 ": %" PRIu64 "  in Q: %" PRIu64 "  in R: %" PRIu64
                  "  (p|g skipped: %" PRIu64 ")  #R/pi(x)=%s\n",
                  cs_x, n_primes, n_q, n_r, n_skipped,
                  g17(double(n_r) / double(n_primes)).c_str());
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "p,tau_pm1,t_p,in_Q\n";
        for (size_t i = 0; i < pq_prime_census_size(pc); ++i) {
          uint64_t p, tau, tp;
          int inq;
          pq_prime_census_row(pc, i, &p, &tau, &tp, &inq);
          out << p << ',' << tau << ',' << tp << ',' << inq << '\n';
        }
      }
      pq_prime_census_free(pc);
    } else if (cs_lpf->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_x, sieve);
      uint64_t count;
      double cmp;
      check(pq_census_lpf_interval(sieve.handle, cs_x, cs_y, cs_delta, &count, &cmp));
      std::printf("#{n<=%" PRIu64 ": %" PRIu64 "<P(n)<=%s} = %" PRIu64 "  comparator=%s\n",
                  cs_x, cs_y, g17(double(cs_y) * (1 + cs_delta)).c_str(), count,
                  g17(cmp).c_str());
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "x,y,delta,count,comparator\n"
            << cs_x << ',' << cs_y << ',' << g17(cs_delta) << ',' << count << ','
            << g17(cmp) << '\n';
      }
    } else if (cs_psp->parsed() || cs_car->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_limit, sieve);
      pq_u64_list* list = nullptr;
      if (cs_psp->parsed())
        check(pq_census_pseudoprimes(sieve.handle, cs_limit, cs_g, &list));
      else
        check(pq_census_carmichael(sieve.handle, cs_limit, &list));
      size_t count = pq_u64_list_size(list);
      const uint64_t* data = pq_u64_list_data(list);
      std::printf("%zu numbers <= %" PRIu64 ":", count, cs_limit);
      for (size_t i = 0; i < count && i < 40; ++i) std::printf(" %" PRIu64, data[i]);
      if (count > 40) std::printf(" ...");
      std::printf("\n");
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "n\n";
        for (size_t i = 0; i < count; ++i) out << data[i] << '\n';
      }
      pq_u64_list_free(list);
    } else if (cs_tset->parsed()) {
      Sieve sieve;
      acquire_sieve(cs_limit, sieve);
      pq_tset* tset = nullptr;
      check(pq_census_tset(sieve.handle, cs_limit, cs_g, &tset));
      size_t count = pq_tset_size(tset);
      // Ratio against N log log N / log N (log = max(ln, 1)); reported only,
      // the theoretical constant is unspecified.
      double ln_n = std::max(std::log(double(cs_limit)), 1.0);
      double lnln_n = std::max(std::log(ln_n), 1.0);
      double density = double(count) * ln_n / (double(cs_limit) * lnln_n);
      std::printf("#T = %zu  m_max=%" PRIu64 "  bound N^-1/2=%s  all below: %s  "
                  "ratio vs N loglogN/logN: %s\n",
                  count, pq_tset_m_max(tset), g17(pq_tset_frac_bound(tset)).c_str(),
                  pq_tset_all_below_bound(tset) ? "yes" : "no", g17(density).c_str());
      if (count == 0) std::printf("warning: empty T (m-range unsatisfiable at this N)\n");
      if (!cs_csv.empty()) {
        auto out = open_csv(cs_csv);
        out << "m,p,n,frac_num,frac_den,frac_value\n";
        for (size_t i = 0; i < count; ++i) {
          uint64_t m, p, n;
          pq_unit_frac f;
          pq_tset_member(tset, i, &m, &p, &n, &f);
          out << m << ',' << p << ',' << n << ',' << f.num << ',' << f.den << ','
              << g17(double(f.num) / double(f.den)) << '\n';
        }
      }
      pq_tset_free(tset);
    }
  }

  if (sieve_cmd->parsed()) {
    if (!sv_load.empty()) {
      pq_sieve* s = nullptr;
      check(pq_sieve_load(sv_load.c_str(), &s));
      std::printf("loaded sieve limit=%" PRIu64 " from %s (validated)\n",
                  pq_sieve_limit(s), sv_load.c_str());
      pq_sieve_free(s);
    } else if (sv_limit >= 2) {
      pq_sieve* s = nullptr;
      check(pq_sieve_build(sv_limit, &s));
      std::string path = sv_save.empty() ? cache_path_for(sv_limit) : sv_save;
      if (!path.empty()) {
        check(pq_sieve_save(s, path.c_str()));
        g_manifest.note_output(path);
        std::printf("built sieve limit=%" PRIu64 ", saved to %s\n", sv_limit, path.c_str());
      } else {
        std::printf("built sieve limit=%" PRIu64 " (no --save path, nothing written)\n",
                    sv_limit);
      }
      pq_sieve_free(s);
    } else {
      std::fprintf(stderr, "usage error: sieve needs --limit or --load\n");
      return kExitUsage;
    }
  }

  if (verify->parsed()) {
    if (vf_list) {
      std::printf("%s\nall\n", pq_verify_suite_names());
      g_manifest.write();
      return kExitOk;
    }
    int failures = 0;
    check(pq_verify_suite(vf_suite.c_str(), threads, &failures));
    g_manifest.write();
    return failures == 0 ? kExitOk : kExitSuiteFailure;
  }

  g_manifest.write();
  return kExitOk;
}
