#include "padic/demos.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

namespace {

using Emit = std::function<void(std::string, std::string)>;
using Session = std::function<void(const Ring&, DigitRng&, const Emit&)>;

// Run the same scripted session once per requested mode, each time on a fresh
// ring and a fresh generator seeded identically, then interleave the rows so
// that the modes' answers to one step sit next to each other.
Report run_sessions(const DemoOptions& opts, std::string name, Kind kind, const Session& session) {
  Report rep{std::move(name), {}};
  std::vector<std::vector<std::pair<std::string, std::string>>> per_mode;
  for (Mode m : opts.modes) {
    Ring ring(opts.prime, m, opts.prec, opts.rel_cap, opts.abs_cap, opts.float_prec, kind);
    DigitRng rng(opts.seed);
    std::vector<std::pair<std::string, std::string>> rows;
    session(ring, rng,
            [&](std::string k, std::string v) { rows.emplace_back(std::move(k), std::move(v)); });
    per_mode.push_back(std::move(rows));
  }
  std::size_t steps = 0;
  for (const auto& rows : per_mode) steps = std::max(steps, rows.size());
  for (std::size_t s = 0; s < steps; ++s)
    for (std::size_t m = 0; m < per_mode.size(); ++m)
      if (s < per_mode[m].size())
        rep.rows.push_back(
            {per_mode[m][s].first, mode_name(opts.modes[m]), per_mode[m][s].second});
  return rep;
}

// One step whose failure should show up as a value, not kill the session:
// a mode that cannot answer is itself a result worth printing.
void emit_step(const Emit& emit, const std::string& key, const std::function<std::string()>& value) {
  std::string v;
  try {
    v = value();
  } catch (const UnsupportedInMode&) {
    v = "(not tracked in this mode)";
  } catch (const PrecisionError& e) {
    v = std::string("PrecisionError: ") + e.what();
  } catch (const NotInRing& e) {
    v = std::string("NotInRing: ") + e.what();
  }
  emit(key, v);
}

std::string prec_string(long n) { return is_infinite(n) ? "exact" : std::to_string(n); }

std::string lattice_string(const std::vector<std::vector<Int>>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += " ";
      out += rows[i][j].str();
    }
  }
  return out + "]";
}

std::string ratio_string(std::uint64_t peak, std::uint64_t total) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", total ? double(peak) / double(total) : 0.0);
  return buf;
}

// The gcd sessions share one recipe: a monic common factor D and two larger
// cofactors, so euclid_gcd(P*D, Q*D) has a known answer of degree deg(D).
Poly gcd_instance(const Ring& ring, DigitRng& rng, long ddeg, long pq_prec, long d_prec) {
  Poly d0 = Poly::random_monic(ring, ddeg, d_prec, rng);
  Poly p0 = Poly::random(ring, 2 * ddeg, pq_prec, rng);
  Poly q0 = Poly::random(ring, 2 * ddeg, pq_prec, rng);
  return euclid_gcd(p0 * d0, q0 * d0);
}

std::vector<Mode> lattice_modes(const DemoOptions& opts) {
  std::vector<Mode> out;
  for (Mode m : opts.modes)
    if (m != Mode::CR) out.push_back(m);
  return out;
}

}  // namespace

Element somos4(const Ring& ring, long n, long input_prec) {
  Element a = ring.element(1, input_prec);
  Element b = ring.element(1, input_prec);
  Element c = ring.element(1, input_prec);
  Element d = ring.element(3, input_prec);
  if (n <= 2) return a;
  for (long i = 4; i <= n; ++i) {
    Element next = (d * b + c * c) / a;
    a = b;
    b = c;
    c = d;
    d = next;
  }
  return d;
}

Report demo_arithmetic(const DemoOptions& opts) {
  return run_sessions(opts, "arithmetic", Kind::Integers,
                      [&](const Ring& ring, DigitRng& rng, const Emit& emit) {
                        const long p = ring.prime();
                        Element x = ring.random_unit(rng);
                        Element y = ring.random_unit(rng, std::max(2L, ring.default_prec() / 2));
                        emit("x = random unit", digits(x));
                        emit(std::to_string(p) + " * x", digits(Int(p) * x));
                        std::string sum_key = "x";
                        Element s = x;
                        for (long i = 1; i < p; ++i) {
                          s = s + x;
                          sum_key += " + x";
                        }
                        if (p > 5) sum_key = "x summed " + std::to_string(p) + " times";
                        emit(sum_key, digits(s));
                        emit("x^3", digits(pow(x, 3)));
                        emit("x * x * x", digits(x * x * x));
                        emit("y = random unit, lower precision", digits(y));
                        emit("x + y", digits(x + y));
                        emit("(x + y) + (x - y)", digits((x + y) + (x - y)));
                      });
}

Report demo_lattice(const DemoOptions& opts) {
  return run_sessions(
      opts, "lattice", Kind::Integers, [&](const Ring& ring, DigitRng&, const Emit& emit) {
        const std::string p = std::to_string(ring.prime());
        Element x = ring.element(987, 10);
        Element y = ring.element(21, 5);
        emit("x = 987 + O(" + p + "^10)", digits(x));
        emit("y = 21 + O(" + p + "^5)", digits(y));
        emit_step(emit, "precision_lattice([x, y])",
                  [&] { return lattice_string(precision_lattice({x, y})); });
        Element u = x + y;
        Element v = x - y;
        emit("u = x + y", digits(u));
        emit("v = x - y", digits(v));
        emit_step(emit, "precision_lattice([u, v])",
                  [&] { return lattice_string(precision_lattice({u, v})); });
        emit_step(emit, "number_of_diffused_digits([u, v])", [&] {
          return "diffused digits: " + std::to_string(number_of_diffused_digits({u, v}));
        });
        emit("u + v", digits(u + v));
      });
}

Report demo_somos(const DemoOptions& opts) {
  const std::vector<long> ns =
      opts.n < 0 ? std::vector<long>{18, 100} : std::vector<long>{opts.n};
  return run_sessions(opts, "somos", Kind::Integers,
                      [&](const Ring& ring, DigitRng&, const Emit& emit) {
                        for (long n : ns)
                          emit_step(emit, "somos4 u(" + std::to_string(n) + ")", [&] {
                            return digits(somos4(ring, n, ring.default_prec()));
                          });
                      });
}

Report demo_matmul(const DemoOptions& opts) {
  const long dim = opts.dim < 0 ? 2 : opts.dim;
  const long count = opts.n < 0 ? 26 : opts.n;
  return run_sessions(
      opts, "matmul", Kind::Integers, [&](const Ring& ring, DigitRng& rng, const Emit& emit) {
        const long prec = ring.default_prec();
        Mat b = Mat::random(ring, std::size_t(dim), prec, rng);
        for (long i = 1; i < count; ++i) b = b * Mat::random(ring, std::size_t(dim), prec, rng);
        emit("B = A_1 * ... * A_" + std::to_string(count) + ", entry (0,0)", digits(b.at(0, 0)));
        long min_prec = kInfinite;
        long zeros = 0;
        for (std::size_t i = 0; i < b.dim(); ++i)
          for (std::size_t j = 0; j < b.dim(); ++j) {
            min_prec = std::min(min_prec, b.at(i, j).precision());
            if (b.at(i, j).is_zero()) ++zeros;
          }
        emit("min entry precision", prec_string(min_prec));
        emit("entries indistinguishable from zero", std::to_string(zeros));
      });
}

Report demo_charpoly(const DemoOptions& opts) {
  const long dim = opts.dim < 0 ? 3 : opts.dim;
  return run_sessions(opts, "charpoly", Kind::Integers,
                      [&](const Ring& ring, DigitRng& rng, const Emit& emit) {
                        Mat a = Mat::random(ring, std::size_t(dim), ring.default_prec(), rng);
                        std::vector<Element> cp = charpoly(a);
                        Element d = det(a);
                        emit("charpoly(A), constant term", digits(cp[0]));
                        emit("det(A)", digits(d));
                        emit("precision (constant term, det)",
                             "(" + prec_string(cp[0].precision()) + ", " +
                                 prec_string(d.precision()) + ")");
                      });
}

Report demo_gcd(const DemoOptions& opts) {
  const long ddeg = opts.degree < 0 ? 5 : opts.degree;
  return run_sessions(
      opts, "gcd", Kind::Field, [&](const Ring& ring, DigitRng& rng, const Emit& emit) {
        const long pq_prec = std::max(2L, opts.prec / 2);
        const long d_prec = std::max(3L, opts.prec - 2);
        std::string fail;
        std::vector<Element> g;
        try {
          Poly got = gcd_instance(ring, rng, ddeg, pq_prec, d_prec);
          for (std::size_t i = 0; i < got.size(); ++i) g.push_back(got[i]);
        } catch (const PrecisionError& e) {
          fail = std::string("PrecisionError: ") + e.what();
        }
        auto step = [&](const std::string& key, const std::function<std::string()>& fn) {
          emit(key, fail.empty() ? fn() : fail);
        };
        step("deg gcd(P*D, Q*D)", [&] { return std::to_string(long(g.size()) - 1); });
        step("gcd leading coefficient", [&] { return digits(g.back()); });
        step("gcd constant coefficient", [&] { return digits(g.front()); });
        step("min precision below the lead", [&] {
          long m = kInfinite;
          for (std::size_t i = 0; i + 1 < g.size(); ++i) m = std::min(m, g[i].precision());
          return prec_string(m);
        });
      });
}

Report bench_charpoly(const DemoOptions& opts) {
  Report rep{"bench-charpoly", {}};
  const std::vector<Mode> modes = lattice_modes(opts);
  if (modes.empty()) {
    rep.rows.push_back({"note", "CR", "instrumentation requires a lattice mode (lc or lf)"});
    return rep;
  }
  const std::vector<long> dims =
      opts.dim < 0 ? std::vector<long>{2, 3, 4} : std::vector<long>{opts.dim};
  for (long dim : dims) {
    std::vector<Instrumentation> stats;
    for (Mode m : modes) {
      Ring ring(opts.prime, m, opts.prec, opts.rel_cap, opts.abs_cap, opts.float_prec);
      DigitRng rng(opts.seed);
      {
        Mat a = Mat::random(ring, std::size_t(dim), opts.prec, rng);
        charpoly(a);
      }
      stats.push_back(ring.instrumentation());
    }
    const std::string tag = "dim=" + std::to_string(dim) + " ";
    for (std::size_t i = 0; i < modes.size(); ++i) {
      rep.rows.push_back(
          {tag + "total_created", mode_name(modes[i]), std::to_string(stats[i].total_created)});
    }
    for (std::size_t i = 0; i < modes.size(); ++i)
      rep.rows.push_back(
          {tag + "peak_live", mode_name(modes[i]), std::to_string(stats[i].peak_live)});
    for (std::size_t i = 0; i < modes.size(); ++i)
      rep.rows.push_back({tag + "peak/total", mode_name(modes[i]),
                          ratio_string(stats[i].peak_live, stats[i].total_created)});
  }
  return rep;
}

Report bench_gcd(const DemoOptions& opts) {
  Report rep{"bench-gcd", {}};
  const std::vector<Mode> modes = lattice_modes(opts);
  if (modes.empty()) {
    rep.rows.push_back({"note", "CR", "instrumentation requires a lattice mode (lc or lf)"});
    return rep;
  }
  const long pq_prec = std::max(2L, opts.prec / 2);
  const long d_prec = std::max(3L, opts.prec - 2);
  const std::vector<long> degrees =
      opts.degree < 0 ? std::vector<long>{2, 5, 10, 20} : std::vector<long>{opts.degree};
  auto measure = [&](Mode m, long ddeg) {
    Ring ring(opts.prime, m, opts.prec, opts.rel_cap, opts.abs_cap, opts.float_prec, Kind::Field);
    DigitRng rng(opts.seed);
    { gcd_instance(ring, rng, ddeg, pq_prec, d_prec); }
    return ring.instrumentation();
  };
  for (long ddeg : degrees) {
    std::vector<Instrumentation> stats;
    for (Mode m : modes) stats.push_back(measure(m, ddeg));
    const std::string tag = "deg=" + std::to_string(ddeg) + " ";
    for (std::size_t i = 0; i < modes.size(); ++i)
      rep.rows.push_back(
          {tag + "total_created", mode_name(modes[i]), std::to_string(stats[i].total_created)});
    for (std::size_t i = 0; i < modes.size(); ++i)
      rep.rows.push_back(
          {tag + "peak_live", mode_name(modes[i]), std::to_string(stats[i].peak_live)});
    for (std::size_t i = 0; i < modes.size(); ++i)
      rep.rows.push_back({tag + "peak/total", mode_name(modes[i]),
                          ratio_string(stats[i].peak_live, stats[i].total_created)});
  }
  // Where deletions land: the bulk of the mass at tiny co-indices is what
  // makes the update cost of a long session tolerable in practice.
  const long hist_deg = opts.degree < 0 ? 7 : opts.degree;
  std::vector<Instrumentation> stats;
  for (Mode m : modes) stats.push_back(measure(m, hist_deg));
  std::vector<long> keys;
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (const auto& [k, v] : stats[i].coindex_histogram)
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (long k : keys)
    for (std::size_t i = 0; i < modes.size(); ++i) {
      auto it = stats[i].coindex_histogram.find(k);
      rep.rows.push_back({"deg=" + std::to_string(hist_deg) + " coindex=" + std::to_string(k),
                          mode_name(modes[i]),
                          std::to_string(it == stats[i].coindex_histogram.end() ? 0 : it->second)});
    }
  return rep;
}

}  // namespace padic
