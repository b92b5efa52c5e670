#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/matrix.hpp"
#include "padic/poly.hpp"
#include "padic/ring.hpp"

namespace padic {

// Shared knobs for the comparison sessions and benches.  A demo runs every
// requested mode on identical seeded inputs; -1 on n/dim/degree means "the
// session's classic value".
struct DemoOptions {
  long prime = 2;
  long prec = 10;
  long rel_cap = 0;  // 0: derived from prec (see PrecisionModule)
  long abs_cap = 0;
  long float_prec = 0;
  std::uint64_t seed = 20260826;
  long n = -1;
  long dim = -1;
  long degree = -1;
  std::vector<Mode> modes = {Mode::CR, Mode::LC, Mode::LF};
};

// One output line: the step's label, the mode that produced the value, and
// the rendered value.  Steps keep their order; modes cycle within a step.
struct ReportRow {
  std::string key;
  std::string mode;
  std::string value;
};

struct Report {
  std::string name;
  std::vector<ReportRow> rows;
};

Report demo_arithmetic(const DemoOptions& opts);
Report demo_lattice(const DemoOptions& opts);
Report demo_somos(const DemoOptions& opts);
Report demo_matmul(const DemoOptions& opts);
Report demo_charpoly(const DemoOptions& opts);
Report demo_gcd(const DemoOptions& opts);
Report bench_charpoly(const DemoOptions& opts);
Report bench_gcd(const DemoOptions& opts);

// Somos-4 term u_n (u_0 = u_1 = u_2 = 1, u_3 = 3), inputs created at the
// given precision.  Divisions stay in Z_p: the sequence is a 2-adic integer
// sequence even though the exact values pick up powers of 3 in denominators.
Element somos4(const Ring& ring, long n, long input_prec);

}  // namespace padic
