#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "padic/approx.hpp"
#include "padic/floatp.hpp"

namespace padic {

enum class Mode { CR, LC, LF };

const char* mode_name(Mode m);  // "CR", "LC", "LF"

using VariableId = std::uint64_t;

// One differentiable step y = f(x_1, ..., x_n): the value computed on the
// inputs' representatives together with the partial derivatives df/dx_i
// evaluated there.  A variable may appear several times among the partials
// (e.g. x*x contributes (x, x)); contributions are summed.
struct DiffRecord {
  PadicApprox value;
  std::vector<std::pair<VariableId, PadicApprox>> partials;
};

struct Instrumentation {
  std::uint64_t total_created = 0;
  std::uint64_t peak_live = 0;
  std::uint64_t current_live = 0;
  // Key: number of live variables created after the deleted one, logged at
  // each deletion.  Mass concentrated on small keys means deletions mostly
  // touch the cheap trailing part of the matrix.
  std::map<long, std::uint64_t> coindex_histogram;
};

/**
 * Joint precision tracker for a family of p-adic variables.
 *
 * Columns of an internal generator matrix correspond to live variables in
 * creation order; the row span is the module that bounds the joint error of
 * all variables at first order.  Each arithmetic operation contributes the
 * column of its differential; each deletion removes a column and restores the
 * echelon shape with row operations confined to the trailing block.
 *
 * Mode::LC keeps a square upper-triangular matrix of exact p-adic scalars.
 * Pivots are pure powers of p; every entry above a pivot is reduced modulo
 * that pivot.  Each creation appends a cap row p^N, N = min(abs_cap,
 * rel_cap + val(value)), bounding mantissa growth; rows whose cap strictly
 * truncated available precision are flagged ("cap-tainted") so that
 * is_precision_capped can report whether a variable's precision was limited
 * by the caps rather than by the data.
 *
 * Mode::LF keeps a rectangular staircase matrix of floating-point p-adic
 * numbers at a fixed relative precision; there are no caps, exact variables
 * simply contribute a zero column.  Results are fast, not certified.
 *
 * Deletions requested through enqueue_erase (the element destructor hook) are
 * buffered and applied at the start of the next tracker operation, so the
 * op-stream seen by the matrix is deterministic.  A module is single-threaded;
 * callers serialize access externally.
 */
class PrecisionModule {
 public:
  PrecisionModule(long prime, Mode mode, long default_prec, long rel_cap = 0,
                  long abs_cap = 0, long float_prec = 0);

  long prime() const { return p_; }
  Mode mode() const { return mode_; }
  long rel_cap() const { return rel_cap_; }
  long abs_cap() const { return abs_cap_; }
  long float_prec() const { return float_prec_; }

  struct Created {
    VariableId id;
    PadicApprox stored;  // the representative actually recorded (cap-truncated)
  };

  Created create_from_value(const PadicApprox& value, long prec);
  Created create_from_computation(const DiffRecord& rec);

  void erase(VariableId id);
  void enqueue_erase(VariableId id) noexcept;

  long precision_absolute(VariableId id);
  std::vector<std::vector<Int>> precision_lattice(const std::vector<VariableId>& ids);
  long number_of_diffused_digits(const std::vector<VariableId>& ids);
  bool is_precision_capped(VariableId id);  // LC only

  const Instrumentation& instrumentation();
  std::size_t live_count();

  // Verifies the full echelon invariant (shape, pivot purity, reduction) and
  // throws std::logic_error on any violation.  Meant for tests.
  void validate();

  // Introspection for tests and demos (live columns in creation order).
  std::vector<VariableId> live_ids();
  std::vector<std::vector<PadicApprox>> lattice_rows();  // LC: exact, LF: float windows
  std::vector<bool> cap_taints();

 private:
  long p_;
  Mode mode_;
  long default_prec_;
  long rel_cap_;
  long abs_cap_;
  long float_prec_;

  std::vector<VariableId> cols_;
  std::unordered_map<VariableId, std::size_t> col_pos_;

  // LC state: square, rows_[i].size() == cols_.size(), diag pivots.
  std::vector<std::vector<PadicApprox>> rows_;
  std::vector<bool> taint_;

  // LF state: staircase, pivot_col_ strictly increasing per row.
  std::vector<std::vector<PadicFloat>> frows_;
  std::vector<std::size_t> fpivot_;

  std::deque<VariableId> pending_;
  Instrumentation stats_;
  VariableId next_id_ = 1;

  void flush_();
  std::size_t position_(VariableId id) const;
  VariableId register_column_();
  void delete_now_(std::size_t pos);
  void lc_delete_(std::size_t pos);
  void lf_delete_(std::size_t pos);
  long lc_pivot_exp_(std::size_t col) const { return rows_[col][col].val(); }
  void lc_reduce_row_tail_(std::vector<PadicApprox>& row, std::size_t from);

  // Projected generators as exact scalars (shared by lattice queries).
  std::vector<std::vector<PadicApprox>> project_(const std::vector<VariableId>& ids);
};

// Canonical p-power echelon form of exact-scalar generator rows: pivots are
// pure powers of p, entries above a pivot are reduced modulo it, zero rows
// are dropped.  Throws DeficientRank if the rows do not span all columns.
std::vector<std::vector<PadicApprox>> ppower_echelon(
    long p, std::vector<std::vector<PadicApprox>> rows, std::size_t ncols);

// RFC-4180 (CRLF, header row) serializations of the counters and of the
// deletion-coindex histogram.
std::string instrumentation_csv(const Instrumentation& stats);
std::string coindex_histogram_csv(const Instrumentation& stats);

}  // namespace padic
