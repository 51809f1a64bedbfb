#include <random>

#include "doctest.h"
#include "leafsub/asymptotics.hpp"
#include "leafsub/errors.hpp"

using namespace leafsub;

namespace {

// kappa from its defining limit: (log N_h - log(d!)/(d-1)) / d^h with exact N_h.
BigReal kappa_by_limit(long d, long h, Precision p) {
  const BigCount n = complete_dary_count(d, h);
  mpz_class fact, dh;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_ui_pow_ui(dh.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(h));
  const Precision wp{p.bits + 64};
  const BigReal lg = log(BigReal(n, wp)) - log(BigReal(fact, wp)) / BigReal(d - 1, wp);
  return exp(lg / BigReal(dh, wp));
}

PolyRecurrence random_recurrence(std::mt19937_64& rng) {
  const int d = 2 + static_cast<int>(rng() % 4);
  std::vector<mpq_class> c;
  for (int k = 0; k <= d; ++k) c.emplace_back(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 9));
  if (c.back() == 0) c.back() = mpq_class(1, 3);
  return PolyRecurrence(c, mpq_class(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 3)));
}

}  // namespace

TEST_CASE("cdh_recurrence") {
  const PolyRecurrence r2 = cdh_recurrence(2);
  CHECK(r2.degree() == 2);
  CHECK(r2.coefficient(0) == 1);
  CHECK(r2.coefficient(1) == mpq_class(1, 2));
  CHECK(r2.coefficient(2) == mpq_class(1, 2));
  for (long d = 2; d <= 10; ++d) {
    const PolyRecurrence r = cdh_recurrence(d);
    mpq_class sum = 0;
    for (const auto& c : r.coefficients()) sum += c;
    CHECK(sum == d);
    // the iterates are the exact counts
    const auto seq = r.iterate(d <= 4 ? 5 : 3);
    const auto exact = complete_dary_counts(d, static_cast<long>(seq.size()) - 1);
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == mpq_class(exact[i]));
  }
  CHECK(cdh_recurrence(4).coefficient(4) == mpq_class(1, 24));
  CHECK_THROWS_AS(cdh_recurrence(1), InvalidArgument);
}

TEST_CASE("PolyRecurrence validation") {
  CHECK_THROWS_AS(PolyRecurrence({1, 1}, 1), InvalidArgument);
  CHECK_THROWS_AS(PolyRecurrence({1, -1, 1}, 1), InvalidArgument);
  CHECK_THROWS_AS(PolyRecurrence({1, 1, 0}, 1), InvalidArgument);
  CHECK_THROWS_AS(PolyRecurrence({1, 1, 1}, 0), InvalidArgument);
  const PolyRecurrence r({1, 0, 2}, 3);
  CHECK(r.next(3) == 19);
  CHECK(r.correction(2) == mpq_class(1, 8));
}

TEST_CASE("log identity matches direct iteration") {
  const Precision p = Precision::from_digits(40);
  const BigReal tol = BigReal::parse("1e-20", p);
  for (long d = 2; d <= 6; ++d) {
    const PolyRecurrence r = cdh_recurrence(d);
    for (int n = 1; n <= 8; ++n) {
      CHECK(abs(lemma1_log_identity(r, n, p) - log_iterated(r, n, p)) < tol);
    }
  }
  // pure power: A_n = 2 A_{n-1}^2, A_0 = 3
  const PolyRecurrence pure({0, 0, 2}, 3);
  CHECK(abs(lemma1_log_identity(pure, 5, p) - log_iterated(pure, 5, p)) < tol);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    const PolyRecurrence r = random_recurrence(rng);
    for (int n = 1; n <= 5; ++n) CHECK(abs(lemma1_log_identity(r, n, p) - log_iterated(r, n, p)) < tol);
  }
}

TEST_CASE("kappa(2) to 60 digits") {
  const KappaResult k = kappa(2, Precision::from_digits(60));
  CHECK(k.kappa.to_string(60) == "1.24602083298366250894315294419993592846652417729838125817525");
  CHECK(k.terms_used >= 4);
  CHECK(k.kappa_error < BigReal::parse("1e-60", k.kappa.precision()));
}

TEST_CASE("kappa agrees with the defining limit") {
  const Precision p = Precision::from_digits(25);
  for (long d = 2; d <= 6; ++d) {
    const long h = d == 2 ? 9 : d == 3 ? 6 : 5;
    const BigReal a = kappa(d, p).kappa;
    const BigReal b = kappa_by_limit(d, h, p);
    CHECK(a.to_string(20) == b.to_string(20));
  }
}

TEST_CASE("kappa reference values") {
  const char* expected[] = {"1.2460208329836625089", "1.2548603905151219648", "1.2189114976086311337",
                            "1.1888457507166193746", "1.1653946032768012337", "1.1469724134908301673",
                            "1.1322182196849955221", "1.1201639471936817760", "1.1101387293827480433"};
  for (long d = 2; d <= 10; ++d) {
    CHECK(kappa(d, Precision::from_digits(20)).kappa.to_string(20) == expected[d - 2]);
  }
}

TEST_CASE("tail bound is rigorous") {
  for (long d = 2; d <= 6; ++d) {
    const KappaResult lo = kappa(d, Precision::from_digits(30));
    const KappaResult hi = kappa(d, Precision::from_digits(60));
    CHECK(hi.terms_used >= lo.terms_used);
    CHECK(abs(hi.K - lo.K) <= lo.K_error);
    CHECK(abs(hi.kappa - lo.kappa) <= lo.kappa_error);
    CHECK(hi.kappa.to_string(28) == lo.kappa.to_string(28));
    CHECK(lo.kappa > BigReal(1, lo.kappa.precision()));
  }
}

TEST_CASE("growth_constant errors") {
  // A_0 = 1 is a fixed point of A^2: not increasing
  CHECK_THROWS_AS(growth_constant(PolyRecurrence({0, 0, 1}, 1), Precision::from_digits(20)), PreconditionViolation);
}

TEST_CASE("floor formula for d = 2") {
  for (long h = 2; h <= 10; ++h) CHECK(floor_formula(2, h) == complete_dary_count(2, h));
  const FindHReport rep = find_H(2, 10);
  REQUIRE(rep.H);
  CHECK(*rep.H == 2);
  CHECK(rep.mismatches == std::vector<long>{0, 1});
  const FloorEvaluation ev = evaluate_floor_formula(2, 6);
  CHECK(ev.attempts >= 1);
  CHECK(ev.error < BigReal::parse("0.01", ev.x.precision()));
}

TEST_CASE("floor formula for d = 3 lands one above the count") {
  for (long h = 2; h <= 6; ++h) {
    const FloorEvaluation ev = evaluate_floor_formula(3, h);
    CHECK(ev.value == complete_dary_count(3, h) + 1);
  }
  const FindHReport rep = find_H(3, 5);
  CHECK_FALSE(rep.H);
  CHECK(rep.mismatches.size() == 6);
}

TEST_CASE("floor formula limits") {
  FloorPolicy starved;
  starved.guard_bits = -100000;
  starved.max_scale = 1;
  CHECK_THROWS_AS(evaluate_floor_formula(2, 4, starved), PrecisionExhausted);
  CHECK_THROWS_AS(evaluate_floor_formula(2, 50), ResourceLimit);
  CHECK_THROWS_AS(find_H(2, 1), InvalidArgument);
}

TEST_CASE("kappa bounds") {
  const Prop7Report rep = prop7_bound_check(10);
  CHECK(rep.pass);
  CHECK(rep.decreasing_from_3);
  REQUIRE(rep.rows.size() == 9);
  CHECK(rep.rows[0].kappa < rep.rows[1].kappa);  // kappa(2) < kappa(3)
  for (const auto& row : rep.rows) CHECK(row.upper_margin > BigReal(0, row.kappa.precision()));
}

TEST_CASE("complete_dary_monotone") {
  for (long d = 2; d <= 10; ++d) {
    const auto rows = complete_dary_monotone(d, 12);
    REQUIRE(rows.size() == 12);
    bool saw_log = false;
    for (const auto& r : rows) {
      CHECK(r.increasing);
      saw_log = saw_log || !r.exact;
    }
    if (d == 10) CHECK(saw_log);
  }
  // a small exact cap forces the log-space path early and it still agrees
  const auto rows = complete_dary_monotone(2, 8, 64);
  CHECK_FALSE(rows.back().exact);
  for (const auto& r : rows) CHECK(r.increasing);
}
