#include "leafsub/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "leafsub/errors.hpp"

namespace leafsub {

PolyRecurrence::PolyRecurrence(std::vector<mpq_class> coefficients, mpq_class initial)
    : coefficients_(std::move(coefficients)), initial_(std::move(initial)) {
  if (coefficients_.size() < 3) throw InvalidArgument("PolyRecurrence: degree must be at least 2");
  for (auto& a : coefficients_) {
    a.canonicalize();
    if (a < 0) throw InvalidArgument("PolyRecurrence: coefficients must be nonnegative");
  }
  if (coefficients_.back() == 0) throw InvalidArgument("PolyRecurrence: leading coefficient must be positive");
  initial_.canonicalize();
  if (initial_ <= 0) throw InvalidArgument("PolyRecurrence: A_0 must be positive");
}

mpq_class PolyRecurrence::next(const mpq_class& a) const {
  mpq_class acc = coefficients_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * a + coefficients_[static_cast<std::size_t>(k)];
  return acc;
}

std::vector<mpq_class> PolyRecurrence::iterate(int n) const {
  std::vector<mpq_class> seq{initial_};
  for (int i = 0; i < n; ++i) seq.push_back(next(seq.back()));
  return seq;
}

mpq_class PolyRecurrence::correction(const mpq_class& a) const {
  const int d = degree();
  mpq_class lower = 0;
  for (int k = d - 1; k >= 0; --k) lower = lower * a + coefficients_[static_cast<std::size_t>(k)];
  mpq_class lead = coefficients_.back();
  for (int k = 0; k < d; ++k) lead *= a;
  return lower / lead;
}

PolyRecurrence cdh_recurrence(long d) {
  if (d < 2) throw InvalidArgument("cdh_recurrence: d must be at least 2");
  // (A+1)(A+2)...(A+d), low degree first.
  std::vector<mpz_class> poly{1};
  for (long i = 1; i <= d; ++i) {
    std::vector<mpz_class> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k] * i;
      next[k + 1] += poly[k];
    }
    poly = std::move(next);
  }
  mpz_class factorial = 1;
  for (long i = 2; i <= d; ++i) factorial *= i;
  std::vector<mpq_class> coeffs;
  for (const auto& c : poly) coeffs.emplace_back(c, factorial);
  coeffs[1] -= 1;
  return PolyRecurrence(std::move(coeffs), mpq_class(1));
}

namespace {

Precision guarded(Precision p, long extra = 0) { return Precision{p.bits + 32 + extra}; }

mpz_class ipow(long base, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

mpz_class factorial(long d) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d));
  return f;
}

}  // namespace

BigReal lemma1_log_identity(const PolyRecurrence& rec, int n, Precision p) {
  if (n < 1) throw InvalidArgument("lemma1_log_identity: n must be at least 1");
  const long d = rec.degree();
  const Precision wp = guarded(p, static_cast<long>(std::ceil(n * std::log2(static_cast<double>(d)))) + 8);
  const auto seq = rec.iterate(n - 1);

  const mpz_class dn = ipow(d, n);
  BigReal out = BigReal(mpq_class(dn - 1, d - 1), wp) * log_of(rec.coefficient(static_cast<int>(d)), wp);
  out += BigReal(dn, wp) * log_of(rec.initial(), wp);
  for (int j = 0; j < n; ++j) {
    // d^n * d^(-1-j) = d^(n-1-j)
    out += BigReal(ipow(d, n - 1 - j), wp) * log_of(1 + rec.correction(seq[static_cast<std::size_t>(j)]), wp);
  }
  return out;
}

BigReal log_iterated(const PolyRecurrence& rec, int n, Precision p) {
  const long d = rec.degree();
  const Precision wp = guarded(p, static_cast<long>(std::ceil(n * std::log2(static_cast<double>(d)))) + 8);
  return log_of(rec.iterate(n).back(), wp);
}

KappaResult growth_constant(const PolyRecurrence& rec, Precision p) {
  constexpr int kMinTerms = 4;
  constexpr int kMaxTerms = 200;
  const long d = rec.degree();
  const Precision wp = guarded(p, 18);
  const long digits = p.digits();
  const BigReal tolerance = pow(BigReal(10, wp), BigReal(-(digits + 5), wp));
  const mpq_class& lead = rec.coefficient(static_cast<int>(d));

  KappaResult r{d, p, BigReal(wp), BigReal(wp), 0, BigReal(wp), BigReal(wp), BigReal(wp)};
  mpq_class a = rec.initial();
  mpz_class scale = d;  // d^(1+j)
  int j = 0;
  for (;; ++j) {
    if (j >= kMaxTerms) throw PrecisionExhausted("growth_constant: series did not converge within the term cap");
    // 1 + eps_j = A_{j+1} / (a_d A_j^d), with eps_j formed exactly.
    const mpq_class eps = rec.correction(a);
    const BigReal log_term = log1p(BigReal(eps, wp));

    // Everything from index j on is at most d^(-j)/(d-1) * log(1 + eps_j).
    BigReal tail = log_term * BigReal(d, wp) / (BigReal(scale, wp) * BigReal(d - 1, wp));
    if (j >= kMinTerms && tail < tolerance) {
      r.tail_bound = std::move(tail);
      break;
    }
    r.K += log_term / BigReal(scale, wp);
    mpq_class next = rec.next(a);
    if (next <= a) {
      throw PreconditionViolation("growth_constant: sequence is not increasing at index " + std::to_string(j));
    }
    a = std::move(next);
    scale *= d;
  }
  r.terms_used = j;

  const BigReal ulp = pow2(-wp.bits + 2, wp);
  const BigReal one(1, wp);
  r.K_error = r.tail_bound + BigReal(j + 4, wp) * ulp * std::max(one, abs(r.K));

  BigReal offset = log_of(rec.initial(), wp) + log_of(lead, wp) / BigReal(d - 1, wp);
  r.kappa = exp(offset + r.K);
  r.kappa_error = r.kappa * (r.K_error + BigReal(8, wp) * ulp * (abs(offset) + one)) * BigReal(2, wp);
  return r;
}

KappaResult kappa(long d, Precision p) {
  KappaResult r = growth_constant(cdh_recurrence(d), p);
  r.d = d;
  return r;
}

FloorEvaluation evaluate_floor_formula(long d, long h, const FloorPolicy& policy) {
  if (d < 2) throw InvalidArgument("floor_formula: d must be at least 2");
  if (h < 0) throw InvalidArgument("floor_formula: h must be nonnegative");
  const double dh_log2 = static_cast<double>(h) * std::log2(static_cast<double>(d));
  if (dh_log2 > 40) throw ResourceLimit("floor_formula: d^h is too large to evaluate");

  // Rough size of x from a double-precision kappa.
  const double kappa_estimate = kappa(d, Precision::from_digits(17)).kappa.to_double();
  const mpz_class fact = factorial(d);
  const double x_log2 = std::exp2(dh_log2) * std::log2(kappa_estimate) +
                        std::log2(fact.get_d()) / static_cast<double>(d - 1);
  const long base_bits = static_cast<long>(std::ceil(std::max(0.0, x_log2) + dh_log2)) + policy.guard_bits;

  const mpz_class dh = ipow(d, h);
  FloorEvaluation out;
  for (int scale = 1; scale <= policy.max_scale; scale *= 2) {
    const Precision wp{base_bits * scale};
    ++out.attempts;
    const KappaResult k = kappa(d, wp);
    const Precision work{k.K.precision().bits + static_cast<long>(std::ceil(dh_log2)) + 8};
    const BigReal one(1, work);
    const BigReal log_fact_share = log(BigReal(fact, work)) / BigReal(d - 1, work);
    const BigReal DH(dh, work);
    // log x = log(d!)/(d-1) + d^h (K - log(d!)/(d-1))
    const BigReal log_x = log_fact_share + DH * (k.K.with_precision(work) - log_fact_share);
    out.x = exp(log_x);
    const BigReal ulp = pow2(-work.bits + 4, work);
    const BigReal log_err = DH * (k.K_error + ulp * (abs(log_fact_share) + one)) + ulp * (abs(log_x) + one);
    // |exp(t) - 1| <= 2|t| for |t| <= 1
    out.error = out.x * log_err * BigReal(2, work) + ulp;
    out.bits_used = work.bits;

    out.value = out.x.floor();
    const BigReal frac = out.x - BigReal(out.value, work);
    if (log_err < one && frac > out.error && one - frac > out.error) return out;
  }
  throw PrecisionExhausted("floor_formula: fractional part of x not resolved for d=" + std::to_string(d) +
                           ", h=" + std::to_string(h) + " within " + std::to_string(policy.max_scale) +
                           "x the initial precision");
}

FindHReport find_H(long d, long h_max, const FloorPolicy& policy) {
  if (d < 2) throw InvalidArgument("find_H: d must be at least 2");
  if (h_max < 2) throw InvalidArgument("find_H: h_max must be at least 2");
  FindHReport rep;
  rep.d = d;
  rep.h_max = h_max;
  const auto exact = complete_dary_counts(d, h_max);
  for (long h = 0; h <= h_max; ++h) {
    FloorRow row;
    row.h = h;
    row.exact = exact[static_cast<std::size_t>(h)];
    try {
      FloorEvaluation ev = evaluate_floor_formula(d, h, policy);
      row.floor = ev.value;
      const long int_digits = static_cast<long>(mpz_sizeinbase(ev.value.get_mpz_t(), 10));
      row.x = ev.x.to_string(std::min<long>(int_digits, 40) + 6);
      row.match = ev.value == row.exact;
    } catch (const PrecisionExhausted&) {
      row.match = false;
    }
    if (!row.match) rep.mismatches.push_back(h);
    rep.rows.push_back(std::move(row));
  }
  long H = h_max + 1;
  while (H > 0 && rep.rows[static_cast<std::size_t>(H - 1)].match) --H;
  if (H <= h_max) rep.H = H;
  return rep;
}

Prop7Report prop7_bound_check(long d_max, Precision p) {
  if (d_max < 2) throw InvalidArgument("prop7_bound_check: d_max must be at least 2");
  Prop7Report rep;
  for (long d = 2; d <= d_max; ++d) {
    const KappaResult k = kappa(d, p);
    const Precision wp = k.kappa.precision();
    Prop7Row row;
    row.d = d;
    row.kappa = k.kappa;
    row.bound = root(BigReal(d, wp), static_cast<unsigned long>(d - 1));
    row.lower_margin = k.kappa - BigReal(1, wp);
    row.upper_margin = row.bound - k.kappa;
    // Outer edge of the error interval must satisfy both inequalities.
    row.pass = row.lower_margin > k.kappa_error && row.upper_margin >= k.kappa_error;
    rep.pass = rep.pass && row.pass;
    if (d >= 4 && !(row.kappa < rep.rows.back().kappa)) rep.decreasing_from_3 = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<MonotoneRow> complete_dary_monotone(long d, long h_max, std::size_t max_exact_bits) {
  if (d < 2) throw InvalidArgument("complete_dary_monotone: d must be at least 2");
  std::vector<MonotoneRow> rows;
  std::vector<BigCount> exact{BigCount(1)};
  long h = 1;
  for (; h <= h_max; ++h) {
    const BigCount prev = exact.back();
    if (static_cast<std::size_t>(d) * mpz_sizeinbase(prev.get_mpz_t(), 2) > max_exact_bits) break;
    exact.push_back(big_binomial(prev + d, static_cast<unsigned long>(d)) - prev);
    rows.push_back({h, true, exact.back() > prev});
  }
  if (h > h_max) return rows;

  // Log-space continuation from the last exact value.
  const Precision wp{256};
  const PolyRecurrence rec = cdh_recurrence(d);
  const mpz_class fact = factorial(d);
  const BigReal log_fact = log(BigReal(fact, wp));
  std::vector<BigReal> ratio;  // d! a_k, k < d
  for (long k = 0; k < d; ++k) ratio.emplace_back(rec.coefficient(static_cast<int>(k)) * fact, wp);
  BigReal L = log(BigReal(exact.back(), wp));
  BigReal err = abs(L) * pow2(-wp.bits + 2, wp);
  for (; h <= h_max; ++h) {
    BigReal eps(wp);
    for (long k = 0; k < d; ++k) eps += ratio[static_cast<std::size_t>(k)] * exp(-(BigReal(d - k, wp) * L));
    BigReal next = BigReal(d, wp) * L - log_fact + log1p(eps);
    // Relative rounding per step plus d-fold growth of the inherited error.
    err = BigReal(d, wp) * err + (abs(next) + BigReal(1, wp)) * pow2(-wp.bits + 6, wp);
    rows.push_back({h, false, next - L > err * BigReal(2, wp)});
    L = std::move(next);
  }
  return rows;
}

}  // namespace leafsub
