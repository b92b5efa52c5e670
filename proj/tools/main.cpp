#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padic/demos.hpp"

namespace {

using padic::DemoOptions;
using padic::Mode;
using padic::Report;

std::vector<Mode> parse_modes(const std::string& s) {
  if (s == "cr") return {Mode::CR};
  if (s == "lc") return {Mode::LC};
  if (s == "lf") return {Mode::LF};
  return {Mode::CR, Mode::LC, Mode::LF};
}

void print_text(const Report& rep, const DemoOptions& opts, std::ostream& os) {
  os << "== " << rep.name << " (prime=" << opts.prime << ", prec=" << opts.prec
     << ", seed=" << opts.seed << ") ==\n";
  std::string last;
  bool any = false;
  for (const auto& row : rep.rows) {
    if (!any || row.key != last) {
      os << "\nIn:  " << row.key << "\n";
      last = row.key;
      any = true;
    }
    os << row.mode << ":  " << row.value << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(const Report& rep, std::ostream& os) {
  os << "demo,mode,key,value\r\n";
  for (const auto& row : rep.rows)
    os << csv_field(rep.name) << "," << csv_field(row.mode) << "," << csv_field(row.key) << ","
       << csv_field(row.value) << "\r\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic arithmetic with joint precision tracking: demos and benches"};
  app.require_subcommand(1);

  DemoOptions opts;
  std::string mode = "all";
  std::string format = "text";
  std::string demo_name;
  std::string bench_name;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--prime", opts.prime, "prime p")->check(CLI::Range(2L, 1L << 30));
    cmd->add_option("--prec", opts.prec, "default precision (digits)")
        ->check(CLI::Range(1L, 4096L));
    cmd->add_option("--relcap", opts.rel_cap, "relative precision cap (0: 2*prec)")
        ->check(CLI::Range(0L, 1L << 20));
    cmd->add_option("--abscap", opts.abs_cap, "absolute precision cap (0: 4*prec)")
        ->check(CLI::Range(0L, 1L << 20));
    cmd->add_option("--seed", opts.seed, "random seed")->envname("PADIC_SEED");
    cmd->add_option("--mode", mode, "tracking mode(s) to run")
        ->check(CLI::IsMember({"cr", "lc", "lf", "all"}));
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("--n", opts.n, "sequence index / chain length");
    cmd->add_option("--dim", opts.dim, "matrix dimension");
    cmd->add_option("--degree", opts.degree, "polynomial degree");
  };

  CLI::App* demo = app.add_subcommand("demo", "run one comparison session under each mode");
  demo->add_option("name", demo_name, "which session")
      ->required()
      ->check(CLI::IsMember({"arithmetic", "somos", "matmul", "charpoly", "gcd", "lattice"}));
  add_common(demo);

  CLI::App* bench = app.add_subcommand("bench", "variable-count instrumentation sweeps");
  bench->add_option("name", bench_name, "which workload")
      ->required()
      ->check(CLI::IsMember({"charpoly", "gcd"}));
  add_common(bench);

  CLI11_PARSE(app, argc, argv);
  opts.modes = parse_modes(mode);

  try {
    Report rep;
    if (demo->parsed()) {
      if (demo_name == "arithmetic") rep = padic::demo_arithmetic(opts);
      else if (demo_name == "somos") rep = padic::demo_somos(opts);
      else if (demo_name == "matmul") rep = padic::demo_matmul(opts);
      else if (demo_name == "charpoly") rep = padic::demo_charpoly(opts);
      else if (demo_name == "gcd") rep = padic::demo_gcd(opts);
      else rep = padic::demo_lattice(opts);
    } else {
      rep = bench_name == "charpoly" ? padic::bench_charpoly(opts) : padic::bench_gcd(opts);
    }
    if (format == "csv") print_csv(rep, std::cout);
    else print_text(rep, opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
