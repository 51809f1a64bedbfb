#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leafsub/big_real.hpp"
#include "leafsub/formulas.hpp"

namespace leafsub {

/**
 * A_n = a_0 + a_1 A_{n-1} + ... + a_d A_{n-1}^d with exact nonnegative
 * rational coefficients, a_d > 0 and A_0 > 0.
 */
class PolyRecurrence {
 public:
  PolyRecurrence(std::vector<mpq_class> coefficients, mpq_class initial);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const mpq_class& coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  const mpq_class& initial() const { return initial_; }

  mpq_class next(const mpq_class& a) const;
  /// A_0, ..., A_n.
  std::vector<mpq_class> iterate(int n) const;
  /// sum_{k<d} (a_k / a_d) A^(k-d)
  mpq_class correction(const mpq_class& a) const;

 private:
  std::vector<mpq_class> coefficients_;
  mpq_class initial_;
};

/// The complete d-ary tree recursion -A + binom(A + d, d) in polynomial form, A_0 = 1.
PolyRecurrence cdh_recurrence(long d);

/// Right-hand side of the closed expression for log A_n in terms of A_0..A_{n-1}.
BigReal lemma1_log_identity(const PolyRecurrence& rec, int n, Precision p);

/// log A_n from direct exact iteration.
BigReal log_iterated(const PolyRecurrence& rec, int n, Precision p);

struct KappaResult {
  long d = 0;
  Precision requested;
  BigReal kappa;
  BigReal K;
  int terms_used = 0;
  /// Rigorous bound on the truncated part of the K series.
  BigReal tail_bound;
  /// Tail bound plus accumulated rounding, for K.
  BigReal K_error;
  /// Propagated bound for kappa.
  BigReal kappa_error;
};

/**
 * The constant c with A_n ~ a_d^(-1/(d-1)) c^(d^n), c = exp(log A_0 + log(a_d)/(d-1) + K),
 * K = sum_j d^(-1-j) log(1 + sum_{k<d} (a_k/a_d) A_j^(k-d)).
 *
 * Terms are added until the tail bound d^(-n)/(d-1) log(1 + ...A_n...) drops
 * below 10^-(digits+5), and never fewer than four. Throws
 * PreconditionViolation if the computed prefix is not strictly increasing.
 */
KappaResult growth_constant(const PolyRecurrence& rec, Precision p);

KappaResult kappa(long d, Precision p);

struct FloorPolicy {
  long guard_bits = 64;
  int max_scale = 16;
};

struct FloorEvaluation {
  BigCount value;
  BigReal x;
  BigReal error;
  long bits_used = 0;
  int attempts = 0;
};

/**
 * floor(d!^(1/(d-1)) kappa(d)^(d^h)), evaluated with precision doubled until
 * the fractional part of x is separated from 0 and 1 by more than the error
 * bound. Throws PrecisionExhausted at the ceiling.
 */
FloorEvaluation evaluate_floor_formula(long d, long h, const FloorPolicy& policy = {});

inline BigCount floor_formula(long d, long h, const FloorPolicy& policy = {}) {
  return evaluate_floor_formula(d, h, policy).value;
}

struct FloorRow {
  long h = 0;
  std::optional<BigCount> floor;  // empty when precision was exhausted
  BigCount exact;
  bool match = false;
  std::string x;  // leading digits of the real value
};

struct FindHReport {
  long d = 0;
  long h_max = 0;
  std::optional<long> H;
  std::vector<FloorRow> rows;
  std::vector<long> mismatches;
};

/// Smallest H such that the floor formula equals the exact count for all H <= h <= h_max.
FindHReport find_H(long d, long h_max, const FloorPolicy& policy = {});

struct Prop7Row {
  long d = 0;
  BigReal kappa;
  BigReal bound;  // d^(1/(d-1))
  BigReal lower_margin;  // kappa - 1
  BigReal upper_margin;  // bound - kappa
  bool pass = false;
};

struct Prop7Report {
  std::vector<Prop7Row> rows;
  bool decreasing_from_3 = true;
  bool pass = true;
};

/// Checks 1 < kappa(d) <= d^(1/(d-1)) for 2 <= d <= d_max.
Prop7Report prop7_bound_check(long d_max, Precision p = Precision::from_digits(30));

struct MonotoneRow {
  long h = 0;
  bool exact = false;  // false: certified in log space
  bool increasing = false;
};

/**
 * Checks N(C^d_h) > N(C^d_{h-1}) for 1 <= h <= h_max. Exact integers are used
 * while they fit in `max_exact_bits`; beyond that log N_h is carried by
 * log N_h = d log N_{h-1} - log d! + log(1 + sum_k d! a_k N_{h-1}^(k-d))
 * and the increment is required to exceed its error bound.
 */
std::vector<MonotoneRow> complete_dary_monotone(long d, long h_max,
                                                std::size_t max_exact_bits = kDefaultMaxCountBits);

}  // namespace leafsub
