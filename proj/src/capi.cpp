#include "pseudoquot.h"

#include <algorithm>
#include <memory>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "core/arith.hpp"
#include "core/census.hpp"
#include "core/equidist.hpp"
#include "core/expsum.hpp"
#include "core/fracpart.hpp"
#include "verify/suites.hpp"

using namespace pq;

// Opaque handle definitions.
struct pq_sieve {
  arith::LpfSieve impl;
};
struct pq_frac_seq {
  std::vector<fracpart::UnitFrac> points;
};
struct pq_u64_list {
  std::vector<u64> values;
};
struct pq_prime_census {
  census::PrimeClassCensus impl;
};
struct pq_tset {
  census::TsetRecord impl;
};

namespace {

thread_local std::string g_last_error;

pq_status fail(pq_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Exceptions from the core map onto the status codes; budget errors are
// thrown as length_error.
template <typename Fn>
pq_status guarded(Fn&& fn) {
  try {
    fn();
    return PQ_OK;
  } catch (const std::length_error& e) {
    return fail(PQ_EBUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PQ_EINVAL, e.what());
  } catch (const std::bad_alloc& e) {
    return fail(PQ_ENOMEM, e.what());
  } catch (const std::runtime_error& e) {
    return fail(PQ_EIO, e.what());
  } catch (const std::exception& e) {
    return fail(PQ_EINTERNAL, e.what());
  }
}

unsigned effective_threads(unsigned threads) {
  if (threads != 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

const arith::LpfSieve* unwrap(const pq_sieve* sieve) {
  return sieve ? &sieve->impl : nullptr;
}

}  // namespace

extern "C" {

const char* pq_status_name(pq_status status) {
  switch (status) {
    case PQ_OK: return "ok";
    case PQ_EINVAL: return "invalid argument";
    case PQ_EBUDGET: return "budget exceeded";
    case PQ_ENOMEM: return "out of memory";
    case PQ_EIO: return "i/o error";
    default: return "internal error";
  }
}

const char* pq_version(void) { return "0.1.0"; }

const char* pq_last_error(void) { return g_last_error.c_str(); }

/* ---- sieve ---- */

pq_status pq_sieve_build(uint64_t limit, pq_sieve** out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  *out = nullptr;
  return guarded([&] { *out = new pq_sieve{arith::LpfSieve(limit)}; });
}

pq_status pq_sieve_save(const pq_sieve* sieve, const char* path) {
  if (!sieve || !path) return fail(PQ_EINVAL, "null argument");
  return guarded([&] { sieve->impl.save(path); });
}

pq_status pq_sieve_load(const char* path, pq_sieve** out) {
  if (!out || !path) return fail(PQ_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new pq_sieve{arith::LpfSieve::load(path)}; });
}

void pq_sieve_free(pq_sieve* sieve) { delete sieve; }

uint64_t pq_sieve_limit(const pq_sieve* sieve) { return sieve ? sieve->impl.limit() : 0; }

pq_status pq_sieve_lpf(const pq_sieve* sieve, uint64_t n, uint64_t* out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  if (n == 0 || n > sieve->impl.limit()) return fail(PQ_EINVAL, "n out of sieve range");
  *out = sieve->impl.lpf(n);
  return PQ_OK;
}

pq_status pq_sieve_spf(const pq_sieve* sieve, uint64_t n, uint64_t* out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  if (n == 0 || n > sieve->impl.limit()) return fail(PQ_EINVAL, "n out of sieve range");
  *out = sieve->impl.spf(n);
  return PQ_OK;
}

/* ---- arithmetic ---- */

pq_status pq_factor(uint64_t n, uint64_t* primes, uint32_t* exponents, size_t cap,
                    size_t* count) {
  if (!primes || !exponents || !count) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto f = arith::factor(n);
    if (f.factors.size() > cap) throw std::invalid_argument("factor buffer too small");
    for (size_t i = 0; i < f.factors.size(); ++i) {
      primes[i] = f.factors[i].first;
      exponents[i] = f.factors[i].second;
    }
    *count = f.factors.size();
  });
}

int pq_is_prime(uint64_t n) { return arith::is_prime(n) ? 1 : 0; }

pq_status pq_largest_prime_factor(uint64_t n, const pq_sieve* sieve, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::largest_prime_factor(n, unwrap(sieve)); });
}

pq_status pq_rho_powerful(uint64_t n, uint64_t* rho, uint64_t* s) {
  if (!rho || !s) return fail(PQ_EINVAL, "null argument");
  return guarded([&] { std::tie(*rho, *s) = arith::rho_and_powerful(n); });
}

pq_status pq_gamma_false_witness(uint64_t n, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::gamma_false_witness(n); });
}

pq_status pq_carmichael_lambda(uint64_t n, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::carmichael_lambda(n); });
}

pq_status pq_euler_phi(uint64_t n, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::euler_phi(n); });
}

pq_status pq_tau(uint64_t n, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::tau(n); });
}

pq_status pq_mult_order(uint64_t g, uint64_t p, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = arith::mult_order(g, p); });
}

/* ---- fractional parts ---- */

pq_status pq_frac_quotient(pq_quotient_kind kind, uint64_t g, uint64_t n,
                           const pq_sieve* sieve, pq_unit_frac* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  if (kind < PQ_QUOT_F || kind > PQ_QUOT_HTILDE) return fail(PQ_EINVAL, "bad quotient kind");
  return guarded([&] {
    auto f = fracpart::frac_quotient(static_cast<fracpart::QuotientKind>(kind), g, n,
                                     unwrap(sieve));
    *out = {f.num, f.den};
  });
}

void pq_unit_e(pq_unit_frac x, double* re, double* im) {
  auto z = fracpart::unit_e({x.num, x.den});
  if (re) *re = z.real();
  if (im) *im = z.imag();
}

/* ---- exponential sums ---- */

pq_status pq_single_sum(pq_sum_kind kind, uint64_t g, int64_t a, uint64_t limit,
                        const pq_sieve* sieve, int include_primes, unsigned threads,
                        pq_sum_report* out) {
  if (!out || !sieve) return fail(PQ_EINVAL, "null argument");
  if (kind < PQ_SUM_S || kind > PQ_SUM_TTILDEOPEN) return fail(PQ_EINVAL, "bad sum kind");
  return guarded([&] {
    auto rep = expsum::single_sum(static_cast<expsum::SumKind>(kind), g, a, limit,
                                  sieve->impl, include_primes != 0,
                                  effective_threads(threads));
    *out = {rep.value.real(), rep.value.imag(), rep.term_count, rep.elapsed_s};
  });
}

pq_status pq_double_sum(pq_wsum_kind kind, int64_t a, uint64_t limit,
                        const pq_sieve* sieve, unsigned threads, pq_sum_report* out) {
  if (!out || !sieve) return fail(PQ_EINVAL, "null argument");
  if (kind < PQ_WSUM_W || kind > PQ_WSUM_WTILDE) return fail(PQ_EINVAL, "bad sum kind");
  return guarded([&] {
    auto rep = expsum::double_sum(static_cast<expsum::WSumKind>(kind), a, limit,
                                  sieve->impl, effective_threads(threads));
    *out = {rep.value.real(), rep.value.imag(), rep.term_count, rep.elapsed_s};
  });
}

pq_status pq_complete_power_sum(int64_t a, uint64_t k, uint64_t n, double* re,
                                double* im) {
  if (!re || !im) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] {
    auto z = expsum::complete_power_sum(a, k, n);
    *re = z.real();
    *im = z.imag();
  });
}

pq_status pq_weil_crt_bound(int64_t a, uint64_t k, uint64_t n, double* proof_bound,
                            double* statement_bound) {
  return guarded([&] {
    auto b = expsum::weil_crt_bound(a, k, n);
    if (proof_bound) *proof_bound = b.proof_bound;
    if (statement_bound) *statement_bound = b.statement_bound;
  });
}

pq_status pq_short_sum(int64_t a, uint64_t g, uint64_t p, uint64_t len, double* re,
                       double* im) {
  if (!re || !im) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] {
    auto z = expsum::short_sum(a, g, p, len);
    *re = z.real();
    *im = z.imag();
  });
}

pq_status pq_count_r(uint64_t p, uint32_t s, uint64_t k_range, uint64_t lambda,
                     uint64_t g, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = expsum::count_r(p, s, k_range, lambda, g); });
}

pq_status pq_count_t(uint64_t p, uint32_t s, uint64_t k_range, uint64_t g,
                     uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = expsum::count_t(p, s, k_range, g); });
}

pq_status pq_count_l(int64_t a, uint64_t n, uint64_t s, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = expsum::count_l(a, n, s); });
}

pq_status pq_count_m(int64_t a, uint64_t n, uint64_t s, uint64_t* out) {
  if (!out) return fail(PQ_EINVAL, "null out pointer");
  return guarded([&] { *out = expsum::count_m(a, n, s); });
}

pq_status pq_ds_pair(uint64_t n, uint64_t* d, uint64_t* s) {
  if (!d || !s) return fail(PQ_EINVAL, "null argument");
  return guarded([&] { std::tie(*d, *s) = expsum::ds_pair(n); });
}

/* ---- sequences and equidistribution ---- */

pq_status pq_frac_seq_build(pq_quotient_kind kind, uint64_t g, uint64_t limit,
                            const pq_sieve* sieve, int include_primes,
                            pq_frac_seq** out) {
  if (!out || !sieve) return fail(PQ_EINVAL, "null argument");
  if (kind < PQ_QUOT_F || kind > PQ_QUOT_HTILDE) return fail(PQ_EINVAL, "bad quotient kind");
  *out = nullptr;
  return guarded([&] {
    if (limit < 2 || limit > sieve->impl.limit())
      throw std::invalid_argument("frac_seq: limit out of sieve range");
    auto seq = std::make_unique<pq_frac_seq>();
    for (u64 n = 2; n <= limit; ++n) {
      if (!sieve->impl.is_composite(n) && !(include_primes && sieve->impl.is_prime(n)))
        continue;
      seq->points.push_back(fracpart::frac_quotient(
          static_cast<fracpart::QuotientKind>(kind), g, n, &sieve->impl));
    }
    *out = seq.release();
  });
}

size_t pq_frac_seq_size(const pq_frac_seq* seq) { return seq ? seq->points.size() : 0; }

pq_status pq_frac_seq_get(const pq_frac_seq* seq, size_t index, pq_unit_frac* out) {
  if (!seq || !out) return fail(PQ_EINVAL, "null argument");
  if (index >= seq->points.size()) return fail(PQ_EINVAL, "index out of range");
  *out = {seq->points[index].num, seq->points[index].den};
  return PQ_OK;
}

void pq_frac_seq_free(pq_frac_seq* seq) { delete seq; }

pq_status pq_frac_seq_dstar(const pq_frac_seq* seq, double* out) {
  if (!seq || !out) return fail(PQ_EINVAL, "null argument");
  return guarded([&] { *out = equidist::star_discrepancy(seq->points); });
}

pq_status pq_frac_seq_histogram(const pq_frac_seq* seq, uint32_t bins, uint64_t* counts) {
  if (!seq || !counts) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto h = equidist::histogram(std::span<const fracpart::UnitFrac>(seq->points), bins);
    std::copy(h.begin(), h.end(), counts);
  });
}

pq_status pq_star_discrepancy(const double* points, size_t n, double* out) {
  if (!points || !out) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    *out = equidist::star_discrepancy(std::vector<double>(points, points + n));
  });
}

pq_status pq_erdos_turan_bound(const double* sum_magnitudes, size_t h,
                               uint64_t n_points, double* out) {
  if (!sum_magnitudes || !out) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    *out = equidist::erdos_turan_bound(std::span<const double>(sum_magnitudes, h),
                                       n_points);
  });
}

/* ---- censuses ---- */

pq_status pq_census_psi_smooth(const pq_sieve* sieve, uint64_t x, uint64_t y,
                               uint64_t* count, double* u, double* reference) {
  if (!sieve || !count) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto r = census::psi_smooth(x, y, sieve->impl);
    *count = r.count;
    if (u) *u = r.u;
    if (reference) *reference = r.reference;
  });
}

pq_status pq_census_rho_exceptional(const pq_sieve* sieve, uint64_t x, double y,
                                    uint64_t* count, double* comparator) {
  if (!sieve || !count) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto r = census::rho_exceptional_count(x, y, sieve->impl);
    *count = r.count;
    if (comparator) *comparator = r.comparator;
  });
}

pq_status pq_census_gamma_exceedance(const pq_sieve* sieve, uint64_t x, uint64_t z,
                                     int composite_only, uint64_t* count,
                                     double* comparator) {
  if (!sieve || !count) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto r = census::gamma_exceedance_count(x, z, sieve->impl, composite_only != 0);
    *count = r.count;
    if (comparator) *comparator = r.comparator;
  });
}

pq_status pq_census_lpf_interval(const pq_sieve* sieve, uint64_t x, uint64_t y,
                                 double delta, uint64_t* count, double* comparator) {
  if (!sieve || !count) return fail(PQ_EINVAL, "null argument");
  return guarded([&] {
    auto r = census::lpf_interval_count(x, y, delta, sieve->impl);
    *count = r.count;
    if (comparator) *comparator = r.comparator;
  });
}

size_t pq_u64_list_size(const pq_u64_list* list) { return list ? list->values.size() : 0; }

const uint64_t* pq_u64_list_data(const pq_u64_list* list) {
  return list ? list->values.data() : nullptr;
}

void pq_u64_list_free(pq_u64_list* list) { delete list; }

pq_status pq_census_pseudoprimes(const pq_sieve* sieve, uint64_t limit, uint64_t g,
                                 pq_u64_list** out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pq_u64_list{census::pseudoprime_census(limit, g, sieve->impl)};
  });
}

pq_status pq_census_carmichael(const pq_sieve* sieve, uint64_t limit, pq_u64_list** out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pq_u64_list{census::carmichael_list(limit, sieve->impl)};
  });
}

pq_status pq_census_prime_class(const pq_sieve* sieve, uint64_t x, uint64_t g,
                                pq_prime_class_params params, pq_prime_census** out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    census::PrimeClassParams p{params.tau_exponent, params.order_root,
                               params.order_log_exp};
    *out = new pq_prime_census{census::prime_class_census(x, g, p, sieve->impl)};
  });
}

size_t pq_prime_census_size(const pq_prime_census* census) {
  return census ? census->impl.records.size() : 0;
}

pq_status pq_prime_census_row(const pq_prime_census* census, size_t index, uint64_t* p,
                              uint64_t* tau_pm1, uint64_t* t_p, int* in_q) {
  if (!census) return fail(PQ_EINVAL, "null census");
  if (index >= census->impl.records.size()) return fail(PQ_EINVAL, "index out of range");
  const auto& rec = census->impl.records[index];
  if (p) *p = rec.p;
  if (tau_pm1) *tau_pm1 = rec.tau_pm1;
  if (t_p) *t_p = rec.t_p;
  if (in_q) *in_q = rec.in_q ? 1 : 0;
  return PQ_OK;
}

void pq_prime_census_summary(const pq_prime_census* census, uint64_t* n_primes,
                             uint64_t* n_skipped, uint64_t* n_in_q, uint64_t* n_in_r) {
  if (!census) return;
  if (n_primes) *n_primes = census->impl.n_primes;
  if (n_skipped) *n_skipped = census->impl.n_skipped;
  if (n_in_q) *n_in_q = census->impl.n_in_q;
  if (n_in_r) *n_in_r = census->impl.n_in_r;
}

void pq_prime_census_free(pq_prime_census* census) { delete census; }

pq_status pq_census_tset(const pq_sieve* sieve, uint64_t limit, uint64_t g,
                         pq_tset** out) {
  if (!sieve || !out) return fail(PQ_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new pq_tset{census::build_tset(limit, g, sieve->impl)}; });
}

size_t pq_tset_size(const pq_tset* tset) { return tset ? tset->impl.members.size() : 0; }

uint64_t pq_tset_m_max(const pq_tset* tset) { return tset ? tset->impl.m_max : 0; }

double pq_tset_frac_bound(const pq_tset* tset) {
  return tset ? tset->impl.frac_bound : 0.0;
}

int pq_tset_all_below_bound(const pq_tset* tset) {
  return tset && tset->impl.all_below_bound ? 1 : 0;
}

pq_status pq_tset_member(const pq_tset* tset, size_t index, uint64_t* m, uint64_t* p,
                         uint64_t* n, pq_unit_frac* frac) {
  if (!tset) return fail(PQ_EINVAL, "null tset");
  if (index >= tset->impl.members.size()) return fail(PQ_EINVAL, "index out of range");
  const auto& mem = tset->impl.members[index];
  if (m) *m = mem.m;
  if (p) *p = mem.p;
  if (n) *n = mem.n;
  if (frac) *frac = {mem.frac_h.num, mem.frac_h.den};
  return PQ_OK;
}

void pq_tset_free(pq_tset* tset) { delete tset; }

/* ---- verification ---- */

pq_status pq_verify_suite(const char* name, unsigned threads, int* failures) {
  if (!name || !failures) return fail(PQ_EINVAL, "null argument");
  *failures = 0;
  return guarded([&] {
    verify::Options opt;
    opt.threads = effective_threads(threads);
    std::vector<verify::CriterionResult> results;
    if (!verify::run_suite(name, opt, results, stdout))
      throw std::invalid_argument("unknown suite name");
    for (const auto& r : results)
      if (!r.passed) ++*failures;
  });
}

const char* pq_verify_suite_names(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& n : verify::suite_names()) {
      if (!s.empty()) s += '\n';
      s += n;
    }
    return s;
  }();
  return joined.c_str();
}

} /* extern "C" */
