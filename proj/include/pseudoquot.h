/*
 * pseudoquot - exponential sums, fractional parts, and censuses for
 * pseudoprime-related quotients.
 *
 * C API of the shared library. All functions return pq_status; results go
 * through out-parameters. Variable-size results are returned as opaque
 * handles with accessor functions and must be released with the matching
 * *_free call. Handles are immutable after creation and safe to share
 * across threads.
 */

#ifndef PSEUDOQUOT_H
#define PSEUDOQUOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) || defined(__clang__)
#define PQ_API __attribute__((visibility("default")))
#else
#define PQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pq_status {
  PQ_OK = 0,
  PQ_EINVAL = 1,   /* precondition violated / bad argument */
  PQ_EBUDGET = 2,  /* enumeration budget exceeded */
  PQ_ENOMEM = 3,   /* allocation failure */
  PQ_EIO = 4,      /* file error (sieve cache) */
  PQ_EINTERNAL = 5 /* unexpected internal failure */
} pq_status;

PQ_API const char* pq_status_name(pq_status status);
PQ_API const char* pq_version(void);

/* Thread-local text for the most recent non-OK status on this thread. */
PQ_API const char* pq_last_error(void);

/* ---- largest/smallest prime factor sieve ------------------------------ */

typedef struct pq_sieve pq_sieve;

PQ_API pq_status pq_sieve_build(uint64_t limit, pq_sieve** out);
PQ_API pq_status pq_sieve_save(const pq_sieve* sieve, const char* path);
PQ_API pq_status pq_sieve_load(const char* path, pq_sieve** out);
PQ_API void pq_sieve_free(pq_sieve* sieve);
PQ_API uint64_t pq_sieve_limit(const pq_sieve* sieve);
PQ_API pq_status pq_sieve_lpf(const pq_sieve* sieve, uint64_t n, uint64_t* out);
PQ_API pq_status pq_sieve_spf(const pq_sieve* sieve, uint64_t n, uint64_t* out);

/* ---- exact arithmetic -------------------------------------------------- */

/* Prime-power decomposition of n into parallel arrays of capacity cap;
 * *count receives the number of distinct primes (at most 15 for 64-bit n).
 * Fails with PQ_EINVAL when cap is too small or n is 0. */
PQ_API pq_status pq_factor(uint64_t n, uint64_t* primes, uint32_t* exponents,
                    size_t cap, size_t* count);

PQ_API int pq_is_prime(uint64_t n);

/* P(n) with P(1) = 1; sieve may be NULL (factorization path). */
PQ_API pq_status pq_largest_prime_factor(uint64_t n, const pq_sieve* sieve, uint64_t* out);

/* n = rho * s with rho squarefree, s powerful, gcd(rho, s) = 1. */
PQ_API pq_status pq_rho_powerful(uint64_t n, uint64_t* rho, uint64_t* s);

/* gamma(n) = prod_{p|n} gcd(n-1, p-1), the false-witness count mod n. */
PQ_API pq_status pq_gamma_false_witness(uint64_t n, uint64_t* out);

PQ_API pq_status pq_carmichael_lambda(uint64_t n, uint64_t* out);
PQ_API pq_status pq_euler_phi(uint64_t n, uint64_t* out);
PQ_API pq_status pq_tau(uint64_t n, uint64_t* out);

/* Multiplicative order of g modulo prime p; rejects p | g, non-prime p. */
PQ_API pq_status pq_mult_order(uint64_t g, uint64_t p, uint64_t* out);

/* ---- fractional parts -------------------------------------------------- */

typedef enum pq_quotient_kind {
  PQ_QUOT_F = 0,      /* {(g^{n-1} - 1)/n}    */
  PQ_QUOT_H = 1,      /* {(g^{n-1} - 1)/P(n)} */
  PQ_QUOT_FTILDE = 2, /* {(g^n - g)/n}        */
  PQ_QUOT_HTILDE = 3  /* {(g^n - g)/P(n)}     */
} pq_quotient_kind;

typedef struct pq_unit_frac {
  uint64_t num; /* 0 <= num < den */
  uint64_t den; /* n or P(n); kept unreduced */
} pq_unit_frac;

PQ_API pq_status pq_frac_quotient(pq_quotient_kind kind, uint64_t g, uint64_t n,
                           const pq_sieve* sieve, pq_unit_frac* out);

/* e(x) = exp(2 pi i x). */
PQ_API void pq_unit_e(pq_unit_frac x, double* re, double* im);

/* ---- exponential sums -------------------------------------------------- */

typedef enum pq_sum_kind {
  PQ_SUM_S = 0,          /* e(a h_g(n))  */
  PQ_SUM_STILDE = 1,     /* e(a h~_g(n)) */
  PQ_SUM_TOPEN = 2,      /* e(a f_g(n))  */
  PQ_SUM_TTILDEOPEN = 3  /* e(a f~_g(n)) */
} pq_sum_kind;

typedef enum pq_wsum_kind { PQ_WSUM_W = 0, PQ_WSUM_WTILDE = 1 } pq_wsum_kind;

typedef struct pq_sum_report {
  double re;
  double im;
  uint64_t term_count;
  double elapsed_s;
} pq_sum_report;

/* Sum over composite n <= limit (all n >= 2 when include_primes != 0).
 * threads = 0 means one worker per hardware core; results are identical
 * for every thread count. Rejects a = 0 and g < 2. */
PQ_API pq_status pq_single_sum(pq_sum_kind kind, uint64_t g, int64_t a, uint64_t limit,
                        const pq_sieve* sieve, int include_primes,
                        unsigned threads, pq_sum_report* out);

/* Sum over composite n <= limit and units g mod n; term_count counts the
 * (n, g) pairs. Rejects a = 0. */
PQ_API pq_status pq_double_sum(pq_wsum_kind kind, int64_t a, uint64_t limit,
                        const pq_sieve* sieve, unsigned threads,
                        pq_sum_report* out);

/* Complete sum over units of e(a g^k / n); CRT product path for n > 10^4. */
PQ_API pq_status pq_complete_power_sum(int64_t a, uint64_t k, uint64_t n,
                                double* re, double* im);

/* Proof-level and statement-level bound for the complete power sum. */
PQ_API pq_status pq_weil_crt_bound(int64_t a, uint64_t k, uint64_t n,
                            double* proof_bound, double* statement_bound);

/* Sum over m = 1..len of e(a g^m / p), p prime, p not dividing g. */
PQ_API pq_status pq_short_sum(int64_t a, uint64_t g, uint64_t p, uint64_t len,
                       double* re, double* im);

/* R_{p,s}(K, lambda) and T_{p,s}(K) solution counters (direct enumeration;
 * fails with PQ_EBUDGET when positions * K^positions exceeds 10^8). */
PQ_API pq_status pq_count_r(uint64_t p, uint32_t s, uint64_t k_range, uint64_t lambda,
                     uint64_t g, uint64_t* out);
PQ_API pq_status pq_count_t(uint64_t p, uint32_t s, uint64_t k_range, uint64_t g,
                     uint64_t* out);

/* L_a(n,s) and M_a(n,s); M is counted independently of L. */
PQ_API pq_status pq_count_l(int64_t a, uint64_t n, uint64_t s, uint64_t* out);
PQ_API pq_status pq_count_m(int64_t a, uint64_t n, uint64_t s, uint64_t* out);

/* d_n = gcd(n, lambda(n)), s_n = lambda(n)/d_n. */
PQ_API pq_status pq_ds_pair(uint64_t n, uint64_t* d, uint64_t* s);

/* ---- fractional-part sequences and equidistribution -------------------- */

typedef struct pq_frac_seq pq_frac_seq;

/* The sequence of fractional parts for composite n <= limit (all n >= 2
 * when include_primes != 0), in ascending n order. */
PQ_API pq_status pq_frac_seq_build(pq_quotient_kind kind, uint64_t g, uint64_t limit,
                            const pq_sieve* sieve, int include_primes,
                            pq_frac_seq** out);
PQ_API size_t pq_frac_seq_size(const pq_frac_seq* seq);
PQ_API pq_status pq_frac_seq_get(const pq_frac_seq* seq, size_t index, pq_unit_frac* out);
PQ_API void pq_frac_seq_free(pq_frac_seq* seq);

/* Exact star discrepancy of the sequence (exact-fraction sort). */
PQ_API pq_status pq_frac_seq_dstar(const pq_frac_seq* seq, double* out);

/* Exact half-open bin counts; counts must have room for bins entries. */
PQ_API pq_status pq_frac_seq_histogram(const pq_frac_seq* seq, uint32_t bins,
                                uint64_t* counts);

/* Star discrepancy of raw unit-interval points. */
PQ_API pq_status pq_star_discrepancy(const double* points, size_t n, double* out);

/* Erdos-Turan bound 1/(H+1) + (3/N) sum |S(a)|/a from |S(1)|..|S(H)|. */
PQ_API pq_status pq_erdos_turan_bound(const double* sum_magnitudes, size_t h,
                               uint64_t n_points, double* out);

/* ---- censuses ----------------------------------------------------------- */

/* Exact Psi(x,y) plus u = log x/log y and the reference value x u^{-u}. */
PQ_API pq_status pq_census_psi_smooth(const pq_sieve* sieve, uint64_t x, uint64_t y,
                               uint64_t* count, double* u, double* reference);

/* #{n <= x : rho(n) <= n/y}; comparator x / sqrt(y). */
PQ_API pq_status pq_census_rho_exceptional(const pq_sieve* sieve, uint64_t x, double y,
                                    uint64_t* count, double* comparator);

/* #{composite n <= x : gamma(n) > z}; comparator from the optimized form. */
PQ_API pq_status pq_census_gamma_exceedance(const pq_sieve* sieve, uint64_t x, uint64_t z,
                                     int composite_only, uint64_t* count,
                                     double* comparator);

/* #{n <= x : y < P(n) <= y(1+delta)}; comparator x log(1+delta)/log y. */
PQ_API pq_status pq_census_lpf_interval(const pq_sieve* sieve, uint64_t x, uint64_t y,
                                 double delta, uint64_t* count, double* comparator);

typedef struct pq_u64_list pq_u64_list;
PQ_API size_t pq_u64_list_size(const pq_u64_list* list);
PQ_API const uint64_t* pq_u64_list_data(const pq_u64_list* list);
PQ_API void pq_u64_list_free(pq_u64_list* list);

/* Sorted composite n <= limit with g^{n-1} = 1 mod n. */
PQ_API pq_status pq_census_pseudoprimes(const pq_sieve* sieve, uint64_t limit, uint64_t g,
                                 pq_u64_list** out);

/* Sorted Carmichael numbers <= limit (Korselt criterion). */
PQ_API pq_status pq_census_carmichael(const pq_sieve* sieve, uint64_t limit,
                               pq_u64_list** out);

/* Prime classification census for the order/divisor thresholds. */
typedef struct pq_prime_census pq_prime_census;

typedef struct pq_prime_class_params {
  double tau_exponent;  /* c1, default 2 */
  double order_root;    /* theta, default 1/2 */
  double order_log_exp; /* beta, default 10 */
} pq_prime_class_params;

PQ_API pq_status pq_census_prime_class(const pq_sieve* sieve, uint64_t x, uint64_t g,
                                pq_prime_class_params params,
                                pq_prime_census** out);
PQ_API size_t pq_prime_census_size(const pq_prime_census* census);
PQ_API pq_status pq_prime_census_row(const pq_prime_census* census, size_t index,
                              uint64_t* p, uint64_t* tau_pm1, uint64_t* t_p,
                              int* in_q);
PQ_API void pq_prime_census_summary(const pq_prime_census* census, uint64_t* n_primes,
                             uint64_t* n_skipped, uint64_t* n_in_q,
                             uint64_t* n_in_r);
PQ_API void pq_prime_census_free(pq_prime_census* census);

/* Lower-bound construction: members n = m p with m <= ln N/(6 ln g) and
 * N^{2/3} < p <= N/m. Empty membership is reported, not an error. */
typedef struct pq_tset pq_tset;

PQ_API pq_status pq_census_tset(const pq_sieve* sieve, uint64_t limit, uint64_t g,
                         pq_tset** out);
PQ_API size_t pq_tset_size(const pq_tset* tset);
PQ_API uint64_t pq_tset_m_max(const pq_tset* tset);
PQ_API double pq_tset_frac_bound(const pq_tset* tset); /* N^{-1/2} */
PQ_API int pq_tset_all_below_bound(const pq_tset* tset);
PQ_API pq_status pq_tset_member(const pq_tset* tset, size_t index, uint64_t* m,
                         uint64_t* p, uint64_t* n, pq_unit_frac* frac);
PQ_API void pq_tset_free(pq_tset* tset);

/* ---- verification suites ------------------------------------------------ */

/* Runs the named acceptance suite ("all" for every criterion), printing one
 * PASS/FAIL line per criterion to stdout. *failures receives the number of
 * failed criteria; PQ_EINVAL for an unknown suite name. */
PQ_API pq_status pq_verify_suite(const char* name, unsigned threads, int* failures);

/* Newline-separated list of suite names. */
PQ_API const char* pq_verify_suite_names(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PSEUDOQUOT_H */
