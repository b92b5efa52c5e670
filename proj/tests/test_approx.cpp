#include "padic/approx.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "padic/errors.hpp"

using namespace padic;

TEST_CASE("pow_int and unit inverses") {
  CHECK(pow_int(2, 0) == 1);
  CHECK(pow_int(2, 10) == 1024);
  CHECK(pow_int(3, 5) == 243);
  CHECK(unit_inverse_mod(2, Int(3), 5) == 11);    // 3 * 11 = 33 = 1 + 32
  CHECK(unit_inverse_mod(3, Int(2), 5) == 122);   // 2 * 122 = 244 = 1 + 243
  CHECK(unit_inverse_mod(5, Int(7), 4) == 268);   // 7 * 268 = 1876 = 1 + 3 * 625
  for (long u : {3L, 5L, 7L, 101L}) {
    const Int inv = unit_inverse_mod(2, Int(u), 16);
    CHECK((inv * u) % pow_int(2, 16) == 1);
  }
}

TEST_CASE("canonical residue construction") {
  const PadicApprox a(2, Int(173), 10);
  CHECK(a.unit() == 173);
  CHECK(a.val() == 0);
  CHECK(a.prec() == 10);
  CHECK(a.lift() == 173);

  // Value with positive valuation: 194 = 2 * 97.
  const PadicApprox b(2, Int(194), 10);
  CHECK(b.val() == 1);
  CHECK(b.unit() == 97);

  // Reduction happens modulo p^prec: 1024 + 173 = 173 at 10 digits.
  CHECK(PadicApprox(2, Int(1197), 10) == a);

  // Nothing visible below p^prec collapses to the zero representative.
  const PadicApprox z(2, Int(1024), 10);
  CHECK(z.is_zero_rep());
  CHECK(z.val() == kInfinite);
  CHECK(z.prec() == 10);

  // Exact values keep signed mantissas.
  const PadicApprox e = PadicApprox::exact(2, Int(-6));
  CHECK(e.is_exact());
  CHECK(e.val() == 1);
  CHECK(e.unit() == -3);
}

TEST_CASE("digit rendering") {
  CHECK(render_digits(PadicApprox(2, Int(173), 10)) == "…0010101101");
  CHECK(render_digits(PadicApprox(2, Int(194), 10)) == "…0011000010");
  CHECK(render_digits(PadicApprox(3, Int(122), 5)) == "…11112");
  CHECK(render_digits(PadicApprox::zero(2, 10)) == "…0000000000");
  CHECK(render_digits(PadicApprox::from_parts(2, Int(603), -3, 7)) == "…1001011.011");
  CHECK(render_digits(PadicApprox(2, Int(1974), 11)) == "…11110110110");
}

TEST_CASE("digit parsing inverts rendering") {
  for (const char* s : {"…0010101101", "…0011000010", "…11110110110"}) {
    const PadicApprox a = parse_digits(2, s);
    CHECK(render_digits(a) == s);
  }
  CHECK(parse_digits(3, "…11112") == PadicApprox(3, Int(122), 5));
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const long p = i % 2 ? 2 : 3;
    const PadicApprox a(p, Int(gen() % 100000), 12);
    CHECK(parse_digits(p, render_digits(a)) == a);
  }
}

TEST_CASE("representative arithmetic") {
  const PadicApprox a(2, Int(173), 10);
  const PadicApprox b(2, Int(21), 10);
  CHECK(add(a, b, 10) == PadicApprox(2, Int(194), 10));
  CHECK(sub(a, b, 10) == PadicApprox(2, Int(152), 10));
  CHECK(mul(a, b, 10) == PadicApprox(2, Int(561), 10));  // 3633 mod 1024
  CHECK(sub(a, a, 10).is_zero_rep());

  // 1/3 at 5 binary digits is 11: 3 * 11 = 33 = 1 + 2^5.
  CHECK(div(PadicApprox::one(2), PadicApprox(2, Int(3), 5), 5) ==
        PadicApprox(2, Int(11), 5));
  // Division tracks valuations: 12 / 2 = 6 has valuation 1.
  CHECK(div(PadicApprox(2, Int(12), 10), PadicApprox(2, Int(2), 10), 8).val() == 1);

  CHECK_THROWS_AS(div(a, PadicApprox::zero(2, kInfinite), 10), DivisionByZero);
  CHECK(shift(a, 3) == PadicApprox::from_parts(2, Int(173), 3, 13));
  CHECK(neg(b, 10) == PadicApprox(2, Int(1003), 10));
}

TEST_CASE("arithmetic on exact representatives stays exact") {
  const PadicApprox a = PadicApprox::exact(2, Int(100));
  const PadicApprox b = PadicApprox::exact(2, Int(-36));
  const PadicApprox s = add(a, b, kInfinite);
  CHECK(s.is_exact());
  CHECK(s.lift() == 64);
  CHECK(mul(a, b, kInfinite).unit() == -225);  // -3600 = 2^4 * (-225)
}

TEST_CASE("expansion of rationals") {
  CHECK(from_rational(2, Rational(1, 3), 5) == PadicApprox(2, Int(11), 5));
  CHECK(from_rational(3, Rational(1, 2), 5) == PadicApprox(3, Int(122), 5));
  CHECK(from_rational(2, Rational(2, 3), 6).val() == 1);
  CHECK(from_rational(2, Rational(0, 1), 8).is_zero_rep());
  // Denominator a power of p: exactly representable.
  const PadicApprox h = from_rational(2, Rational(3, 4), kInfinite);
  CHECK(h.is_exact());
  CHECK(h.val() == -2);
  CHECK_THROWS_AS(from_rational(2, Rational(1, 3), kInfinite), std::invalid_argument);
  // Cross-checked against the independent residue oracle.
  for (long n : {1L, 3L, 7L, 12L}) {
    const Rational q(5, 7);
    CHECK(from_rational(2, q, n).lift() == oracle::mod_p_power(q, 2, n));
  }
}

TEST_CASE("reduced clamps the window") {
  const PadicApprox a(2, Int(173), 10);
  CHECK(a.reduced(4) == PadicApprox(2, Int(13), 4));
  CHECK(a.reduced(kInfinite) == a);  // never widens
  CHECK(PadicApprox(2, Int(8), 10).reduced(3).is_zero_rep());
}
