#include "padic/tracker.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "padic/errors.hpp"

using namespace padic;

namespace {

PadicApprox ex(long p, long v) { return PadicApprox::exact(p, Int(v)); }

std::vector<std::vector<PadicApprox>> exact_rows(long p,
                                                 const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<PadicApprox>> out;
  for (const auto& r : rows) {
    std::vector<PadicApprox> row;
    for (long v : r) row.push_back(ex(p, v));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Int>> lift_rows(const std::vector<std::vector<PadicApprox>>& rows) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (const auto& e : r) row.push_back(e.lift());
    out.push_back(std::move(row));
  }
  return out;
}

PadicApprox one2() { return PadicApprox::one(2); }

}  // namespace

TEST_CASE("p-power echelon canonicalizes generator rows") {
  // Over Z_2 the unit 3 in 6 = 2*3 divides away: the pivot is the pure power.
  auto e = ppower_echelon(2, exact_rows(2, {{6, 4}, {0, 8}}), 2);
  CHECK(lift_rows(e) == std::vector<std::vector<Int>>{{2, 4}, {0, 8}});

  // Row order cannot matter.
  auto f = ppower_echelon(2, exact_rows(2, {{0, 8}, {6, 4}}), 2);
  CHECK(lift_rows(f) == lift_rows(e));

  // Entries above a pivot are canonical representatives mod the pivot.
  auto g = ppower_echelon(2, exact_rows(2, {{4, -1}, {0, 16}}), 2);
  CHECK(lift_rows(g) == std::vector<std::vector<Int>>{{4, 15}, {0, 16}});
}

TEST_CASE("p-power echelon agrees with the integer HNF oracle") {
  // On lattices containing p^B * Z^k the Z_p-canonical form and the integer
  // HNF coincide, so random instances can be checked against an independent
  // textbook elimination.
  std::mt19937_64 gen(11);
  const long B = 12;
  for (int iter = 0; iter < 60; ++iter) {
    const long p = iter % 2 ? 2 : 3;
    const std::size_t k = 2 + iter % 3;
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < k; ++j)
        row.push_back(long(gen() % 2000) - 1000);
      rows.push_back(row);
    }
    // p^B axes guarantee full rank and make both canonical forms exist.
    std::vector<std::vector<Int>> zrows;
    for (const auto& r : rows) zrows.emplace_back(r.begin(), r.end());
    const Int pb = pow_int(p, B);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Int> axis(k, Int(0));
      axis[j] = pb;
      zrows.push_back(axis);
    }
    auto want = oracle::hnf(zrows, k);

    auto prows = exact_rows(p, rows);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<PadicApprox> axis(k, PadicApprox::exact(p, Int(0)));
      axis[j] = PadicApprox::exact(p, pb);
      prows.push_back(std::move(axis));
    }
    CHECK(lift_rows(ppower_echelon(p, std::move(prows), k)) == want);
  }
}

TEST_CASE("p-power echelon rejects deficient rank") {
  CHECK_THROWS_AS(ppower_echelon(2, exact_rows(2, {{2, 4}}), 2), DeficientRank);
  CHECK_THROWS_AS(ppower_echelon(2, exact_rows(2, {{0, 1}, {0, 2}}), 2), DeficientRank);
}

TEST_CASE("module lifecycle, caps and errors") {
  CHECK_THROWS_AS(PrecisionModule(2, Mode::CR, 10), std::invalid_argument);

  PrecisionModule m(2, Mode::LC, 5, 4, 6);
  auto x = m.create_from_value(PadicApprox(2, Int(7), 3), 3);
  CHECK(m.precision_absolute(x.id) == 3);
  CHECK_FALSE(m.is_precision_capped(x.id));

  // Requested 10 digits exceed min(abs 6, rel 4 + val 0): stored capped at 4.
  auto y = m.create_from_value(PadicApprox(2, Int(9), 10), 10);
  CHECK(m.precision_absolute(y.id) == 4);
  CHECK(m.is_precision_capped(y.id));
  CHECK(y.stored.prec() == 4);

  CHECK(m.live_count() == 2);
  CHECK_THROWS_AS(m.precision_absolute(999), UnknownVariable);
  m.erase(x.id);
  CHECK(m.live_count() == 1);
  CHECK_THROWS_AS(m.precision_absolute(x.id), UnknownVariable);

  const auto& stats = m.instrumentation();
  CHECK(stats.total_created == 2);
  CHECK(stats.peak_live == 2);
  CHECK(stats.current_live == 1);
  CHECK(stats.coindex_histogram.at(1) == 1);  // y was created after x
  m.validate();
}

TEST_CASE("computation columns follow the differential") {
  PrecisionModule m(2, Mode::LC, 10);
  auto x = m.create_from_value(PadicApprox(2, Int(5), 5), 5);
  auto y = m.create_from_value(PadicApprox(2, Int(9), 10), 10);

  // Duplicate partials are summed: d(x + x) = 2 dx gains one binary digit.
  DiffRecord dbl{add(x.stored, x.stored, 6), {{x.id, one2()}, {x.id, one2()}}};
  auto z = m.create_from_computation(dbl);
  CHECK(m.precision_absolute(z.id) == 6);

  // A unit product is held back by the weaker factor.
  DiffRecord prod{mul(x.stored, y.stored, 5), {{x.id, y.stored}, {y.id, x.stored}}};
  auto w = m.create_from_computation(prod);
  CHECK(m.precision_absolute(w.id) == 5);
  m.validate();
}

TEST_CASE("deleting inputs preserves the joint lattice") {
  PrecisionModule m(2, Mode::LC, 10);
  auto x = m.create_from_value(PadicApprox(2, Int(987), 10), 10);
  auto y = m.create_from_value(PadicApprox(2, Int(21), 5), 5);
  CHECK(m.precision_lattice({x.id, y.id}) ==
        std::vector<std::vector<Int>>{{1024, 0}, {0, 32}});

  DiffRecord du{add(x.stored, y.stored, 15), {{x.id, one2()}, {y.id, one2()}}};
  auto u = m.create_from_computation(du);
  DiffRecord dv{sub(x.stored, y.stored, 15), {{x.id, one2()}, {y.id, neg(one2(), kInfinite)}}};
  auto v = m.create_from_computation(dv);
  m.validate();

  m.erase(x.id);
  m.validate();
  m.erase(y.id);
  m.validate();

  CHECK(m.precision_lattice({u.id, v.id}) ==
        std::vector<std::vector<Int>>{{32, 2016}, {0, 2048}});
  CHECK(m.number_of_diffused_digits({u.id, v.id}) == 6);
  CHECK(m.precision_absolute(u.id) == 5);
  CHECK(m.precision_absolute(v.id) == 5);

  // The pair jointly pins the sum to eleven digits.
  DiffRecord dw{add(u.stored, v.stored, 15), {{u.id, one2()}, {v.id, one2()}}};
  auto w = m.create_from_computation(dw);
  CHECK(m.precision_absolute(w.id) == 11);
}

TEST_CASE("deletion order does not change survivors") {
  auto build = [](std::vector<int> order) {
    PrecisionModule m(3, Mode::LC, 8);
    auto a = m.create_from_value(PadicApprox(3, Int(14), 6), 6);
    auto b = m.create_from_value(PadicApprox(3, Int(25), 4), 4);
    DiffRecord ds{add(a.stored, b.stored, 10), {{a.id, PadicApprox::one(3)}, {b.id, PadicApprox::one(3)}}};
    auto s = m.create_from_computation(ds);
    DiffRecord dt{mul(a.stored, b.stored, 10), {{a.id, b.stored}, {b.id, a.stored}}};
    auto t = m.create_from_computation(dt);
    std::vector<VariableId> ids = {a.id, b.id, s.id, t.id};
    for (int i : order) m.erase(ids[std::size_t(i)]);
    m.validate();
    return m.precision_lattice({s.id, t.id});
  };
  const auto want = build({0, 1});
  CHECK(build({1, 0}) == want);
}

TEST_CASE("deferred deletions are applied before the next operation") {
  PrecisionModule m(2, Mode::LC, 8);
  auto x = m.create_from_value(PadicApprox(2, Int(3), 8), 8);
  auto y = m.create_from_value(PadicApprox(2, Int(5), 8), 8);
  m.enqueue_erase(x.id);
  m.enqueue_erase(x.id);  // double delete of the same id is tolerated
  CHECK(m.live_count() == 1);
  CHECK(m.live_ids() == std::vector<VariableId>{y.id});
  m.validate();
}

TEST_CASE("exact creations are capped in the exact tracker") {
  // LC insists on a pivot row per column, so even an exact value enters with
  // the growth cap as its precision: min(abs 32, rel 16 + val 0) here.
  PrecisionModule m(2, Mode::LC, 8);
  auto x = m.create_from_value(PadicApprox::exact(2, Int(7)), kInfinite);
  CHECK(m.precision_absolute(x.id) == 16);
  CHECK(m.is_precision_capped(x.id));
  CHECK(m.precision_lattice({x.id}) == std::vector<std::vector<Int>>{{pow_int(2, 16)}});

  // LF has no caps: an exact value contributes no row at all, and a family
  // containing it has no canonical square lattice to report.
  PrecisionModule f(2, Mode::LF, 8, 0, 0, 8);
  auto c = f.create_from_value(PadicApprox::exact(2, Int(7)), kInfinite);
  CHECK(f.precision_absolute(c.id) == kInfinite);
  CHECK_THROWS_AS(f.precision_lattice({c.id}), DeficientRank);
}

TEST_CASE("non-integral generators refuse to lift") {
  PrecisionModule m(2, Mode::LC, 10, 100, 100);
  auto x = m.create_from_value(PadicApprox(2, Int(64), 7), 7);
  // d(1/x) = -1/x^2 pulls the generator below the integers.
  const PadicApprox q = div(PadicApprox::one(2), x.stored, 10);
  DiffRecord inv{q, {{x.id, neg(div(q, x.stored, 10), 10)}}};
  auto z = m.create_from_computation(inv);
  CHECK(m.precision_absolute(z.id) == -5);
  CHECK_THROWS_AS(m.precision_lattice({x.id, z.id}), std::domain_error);
  m.validate();
}

TEST_CASE("floating staircase tracks and deletes") {
  PrecisionModule m(2, Mode::LF, 10, 0, 0, 10);
  auto x = m.create_from_value(PadicApprox(2, Int(987), 10), 10);
  auto y = m.create_from_value(PadicApprox(2, Int(21), 5), 5);
  DiffRecord du{add(x.stored, y.stored, 15), {{x.id, one2()}, {y.id, one2()}}};
  auto u = m.create_from_computation(du);
  DiffRecord dv{sub(x.stored, y.stored, 15), {{x.id, one2()}, {y.id, neg(one2(), kInfinite)}}};
  auto v = m.create_from_computation(dv);
  m.validate();
  m.erase(x.id);
  m.validate();
  m.erase(y.id);
  m.validate();
  // Same canonical answers as the exact tracker on this session.
  CHECK(m.precision_lattice({u.id, v.id}) ==
        std::vector<std::vector<Int>>{{32, 2016}, {0, 2048}});
  CHECK(m.number_of_diffused_digits({u.id, v.id}) == 6);
  CHECK(m.precision_absolute(u.id) == 5);
  CHECK_THROWS_AS(m.is_precision_capped(u.id), UnsupportedInMode);
}

TEST_CASE("exact variables sit outside the floating staircase") {
  PrecisionModule m(2, Mode::LF, 8, 0, 0, 8);
  auto c = m.create_from_value(PadicApprox::exact(2, Int(10)), kInfinite);
  auto x = m.create_from_value(PadicApprox(2, Int(3), 8), 8);
  CHECK(m.precision_absolute(c.id) == kInfinite);
  // c contributes no error: x * c is known exactly as well as x * 10 can be.
  DiffRecord dp{mul(x.stored, c.stored, 9), {{x.id, c.stored}, {c.id, x.stored}}};
  auto z = m.create_from_computation(dp);
  CHECK(m.precision_absolute(z.id) == 9);  // 8 + val(10)
  m.validate();
}

TEST_CASE("serializers emit RFC-4180 tables") {
  Instrumentation stats;
  stats.total_created = 12;
  stats.peak_live = 5;
  stats.current_live = 2;
  stats.coindex_histogram[0] = 7;
  stats.coindex_histogram[3] = 1;
  CHECK(instrumentation_csv(stats) == "total,peak,live\r\n12,5,2\r\n");
  CHECK(coindex_histogram_csv(stats) == "coindex,count\r\n0,7\r\n3,1\r\n");
  CHECK(std::string(mode_name(Mode::CR)) == "CR");
  CHECK(std::string(mode_name(Mode::LC)) == "LC");
  CHECK(std::string(mode_name(Mode::LF)) == "LF");
}
