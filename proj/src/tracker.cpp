#include "padic/tracker.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::CR:
      return "CR";
    case Mode::LC:
      return "LC";
    case Mode::LF:
      return "LF";
  }
  return "?";
}

std::string instrumentation_csv(const Instrumentation& stats) {
  std::string out = "total,peak,live\r\n";
  out += std::to_string(stats.total_created) + "," + std::to_string(stats.peak_live) + "," +
         std::to_string(stats.current_live) + "\r\n";
  return out;
}

std::string coindex_histogram_csv(const Instrumentation& stats) {
  std::string out = "coindex,count\r\n";
  for (const auto& [coindex, count] : stats.coindex_histogram)
    out += std::to_string(coindex) + "," + std::to_string(count) + "\r\n";
  return out;
}

namespace {

// Extended gcd over arbitrary-size integers: g = ax + by, g >= 0.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int x0(1), y0(0), x1(0), y1(1);
  while (b != 0) {
    const Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

long int_val(long p, Int x) {
  assert(x != 0);
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

PadicApprox exact_zero(long p) { return PadicApprox::zero(p, kInfinite); }

// Canonical residue of an exact scalar modulo p^K (a pure reduction of the
// entry's value; the caller is responsible for applying the matching row
// operation so that the matrix row span is preserved).
PadicApprox entry_mod(const PadicApprox& e, long K) {
  if (e.is_zero_rep() || e.val() >= K) return exact_zero(e.prime());
  const Int pk = pow_int(e.prime(), K - e.val());
  Int m = e.unit() % pk;
  if (m < 0) m += pk;
  return PadicApprox::from_parts(e.prime(), m, e.val(), kInfinite);
}

// (e - e mod p^K) / p^K: the integral cofactor consumed by a reduction step.
PadicApprox entry_mod_cofactor(const PadicApprox& e, const PadicApprox& reduced, long K) {
  return shift(sub(e, reduced, kInfinite), -K);
}

}  // namespace

PrecisionModule::PrecisionModule(long prime, Mode mode, long default_prec, long rel_cap,
                                 long abs_cap, long float_prec)
    : p_(prime),
      mode_(mode),
      default_prec_(default_prec),
      rel_cap_(rel_cap > 0 ? rel_cap : 2 * default_prec),
      abs_cap_(abs_cap > 0 ? abs_cap : 4 * default_prec),
      float_prec_(float_prec > 0 ? float_prec : default_prec) {
  if (mode == Mode::CR)
    throw std::invalid_argument("interval tracking keeps no lattice; use LC or LF");
  if (prime < 2 || default_prec < 1)
    throw std::invalid_argument("need prime >= 2 and default precision >= 1");
}

void PrecisionModule::flush_() {
  if (pending_.empty()) return;
  std::vector<std::size_t> batch;
  batch.reserve(pending_.size());
  for (const VariableId id : pending_) {
    auto it = col_pos_.find(id);
    if (it != col_pos_.end()) batch.push_back(it->second);
  }
  pending_.clear();
  // Trailing columns first.  Dropping the last column is the cheap case (no
  // index shuffling, no carried row to eliminate against later pivots), so a
  // batch is scheduled in descending position order; it also keeps every
  // position in the batch valid, since deletions only shift columns above.
  std::sort(batch.begin(), batch.end(), std::greater<>());
  batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  for (const std::size_t pos : batch) delete_now_(pos);
}

std::size_t PrecisionModule::position_(VariableId id) const {
  auto it = col_pos_.find(id);
  if (it == col_pos_.end()) throw UnknownVariable(id);
  return it->second;
}

VariableId PrecisionModule::register_column_() {
  const VariableId id = next_id_++;
  col_pos_[id] = cols_.size();
  cols_.push_back(id);
  ++stats_.total_created;
  ++stats_.current_live;
  stats_.peak_live = std::max(stats_.peak_live, stats_.current_live);
  return id;
}

PrecisionModule::Created PrecisionModule::create_from_value(const PadicApprox& value,
                                                            long prec) {
  flush_();
  assert(value.prime() == p_);
  const long v = value.val();
  const long cap = is_infinite(v) ? abs_cap_ : std::min(abs_cap_, rel_cap_ + v);
  const long k = std::min(clamp_infinite(prec), cap);

  if (mode_ == Mode::LC) {
    for (auto& row : rows_) row.push_back(exact_zero(p_));
    std::vector<PadicApprox> fresh(cols_.size() + 1, exact_zero(p_));
    fresh.back() = PadicApprox::from_parts(p_, 1, k, kInfinite);
    rows_.push_back(std::move(fresh));
    taint_.push_back(clamp_infinite(prec) > cap);
    const VariableId id = register_column_();
    return {id, value.reduced(k)};
  }

  // LF: exact values add only a zero column; finite ones a pivot row p^prec.
  for (auto& row : frows_) row.push_back(PadicFloat(p_, float_prec_));
  if (!is_infinite(clamp_infinite(prec))) {
    std::vector<PadicFloat> fresh(cols_.size() + 1, PadicFloat(p_, float_prec_));
    fresh.back() = PadicFloat::from_parts(p_, float_prec_, 1, prec);
    frows_.push_back(std::move(fresh));
    fpivot_.push_back(cols_.size());
  }
  const VariableId id = register_column_();
  return {id, PadicFloat::from_approx(value, float_prec_).to_approx()};
}

PrecisionModule::Created PrecisionModule::create_from_computation(const DiffRecord& rec) {
  flush_();
  assert(rec.value.prime() == p_);
  // A variable listed several times has its contributions consolidated with
  // exact arithmetic up front.  Summing per row later would be equivalent for
  // LC but not for LF, where the folded float form of a negative partial
  // turns an exact cancellation (x - x) into a spurious p^r term.
  std::vector<std::pair<std::size_t, PadicApprox>> deps;
  deps.reserve(rec.partials.size());
  for (const auto& [id, partial] : rec.partials) {
    const std::size_t pos = position_(id);
    bool merged = false;
    for (auto& [dpos, net] : deps)
      if (dpos == pos) {
        net = add(net, partial, kInfinite);
        merged = true;
        break;
      }
    if (!merged) deps.emplace_back(pos, partial);
  }

  if (mode_ == Mode::LC) {
    const long vy = rec.value.val();
    const long cap = is_infinite(vy) ? abs_cap_ : std::min(abs_cap_, rel_cap_ + vy);
    // New column = partial-weighted sum of the input columns, reduced modulo
    // the cap pivot p^cap (the reduction subtracts multiples of the cap row,
    // which has no other nonzero entry, so cell-wise reduction is exact here).
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      PadicApprox cell = exact_zero(p_);
      for (const auto& [pos, partial] : deps)
        cell = add(cell, mul(partial, rows_[i][pos], kInfinite), kInfinite);
      rows_[i].push_back(entry_mod(cell, cap));
    }
    std::vector<PadicApprox> fresh(cols_.size() + 1, exact_zero(p_));
    fresh.back() = PadicApprox::from_parts(p_, 1, cap, kInfinite);
    rows_.push_back(std::move(fresh));
    taint_.push_back(true);  // a computation row is a truncation by nature
    const VariableId id = register_column_();
    return {id, rec.value.reduced(cap)};
  }

  for (std::size_t i = 0; i < frows_.size(); ++i) {
    PadicFloat cell(p_, float_prec_);
    for (const auto& [pos, partial] : deps)
      cell = float_add(cell, float_mul(PadicFloat::from_approx(partial, float_prec_),
                                       frows_[i][pos]));
    frows_[i].push_back(cell);
  }
  const VariableId id = register_column_();
  return {id, PadicFloat::from_approx(rec.value, float_prec_).to_approx()};
}

void PrecisionModule::enqueue_erase(VariableId id) noexcept {
  try {
    pending_.push_back(id);
  } catch (...) {
    // Out of memory on a destructor path: the variable simply stays live.
  }
}

void PrecisionModule::erase(VariableId id) {
  flush_();
  delete_now_(position_(id));
}

void PrecisionModule::delete_now_(std::size_t pos) {
  const VariableId id = cols_[pos];
  const long coindex = static_cast<long>(cols_.size() - 1 - pos);
  ++stats_.coindex_histogram[coindex];
  --stats_.current_live;

  if (mode_ == Mode::LC)
    lc_delete_(pos);
  else
    lf_delete_(pos);

  cols_.erase(cols_.begin() + static_cast<std::ptrdiff_t>(pos));
  col_pos_.erase(id);
  for (std::size_t i = pos; i < cols_.size(); ++i) col_pos_[cols_[i]] = i;
}

// Canonicalize row[j] for j >= from against the pivot rows of this matrix,
// left to right; every reduction is a full row operation, so the row span is
// untouched.  `self` marks the row's own index in rows_ (or npos for a row
// not currently stored in the matrix).
void PrecisionModule::lc_reduce_row_tail_(std::vector<PadicApprox>& row, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    const PadicApprox& e = row[j];
    if (e.is_zero_rep()) continue;
    const long kj = lc_pivot_exp_(j);
    PadicApprox reduced = entry_mod(e, kj);
    if (reduced == e) continue;
    const PadicApprox t = entry_mod_cofactor(e, reduced, kj);
    row[j] = std::move(reduced);
    for (std::size_t j2 = j + 1; j2 < row.size(); ++j2)
      row[j2] = sub(row[j2], mul(t, rows_[j][j2], kInfinite), kInfinite);
  }
}

void PrecisionModule::lc_delete_(std::size_t pos) {
  for (auto& row : rows_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pos));
  std::vector<PadicApprox> carried = std::move(rows_[pos]);
  rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(pos));
  bool carried_taint = taint_[pos];
  taint_.erase(taint_.begin() + static_cast<std::ptrdiff_t>(pos));

  const std::size_t ncols = rows_.size();
  for (std::size_t c = pos; c < ncols; ++c) {
    const PadicApprox x = carried[c];
    if (x.is_zero_rep()) continue;
    const long kc = lc_pivot_exp_(c);
    const long vx = x.val();
    if (vx >= kc) {
      // Clear carried[c] against the existing pivot (ties keep the earlier row).
      const PadicApprox t = shift(x, -kc);
      carried[c] = exact_zero(p_);
      for (std::size_t j = c + 1; j < ncols; ++j)
        carried[j] = sub(carried[j], mul(t, rows_[c][j], kInfinite), kInfinite);
      carried_taint = carried_taint || taint_[c];
      lc_reduce_row_tail_(carried, c + 1);
    } else {
      // carried wins the pivot.  Combine the two rows by the unimodular pair
      //   [a  b] [carried]   with  a*u + b*p^(kc-vx) = 1,  x = u*p^vx,
      //   [-p^(kc-vx)  u] [rows_[c]]
      // which puts an exactly pure pivot p^vx on the diagonal and a row with
      // an exact zero in column c back into the merge.
      const Int u = x.unit();
      const Int a = unit_inverse_mod(p_, u, kc - vx);
      const Int b = (Int(1) - a * u) / pow_int(p_, kc - vx);
      const PadicApprox ea = PadicApprox::exact(p_, a);
      const PadicApprox eb = PadicApprox::exact(p_, b);
      const PadicApprox eu = PadicApprox::exact(p_, u);
      const PadicApprox es = PadicApprox::from_parts(p_, 1, kc - vx, kInfinite);

      std::vector<PadicApprox> winner(ncols, exact_zero(p_));
      std::vector<PadicApprox> loser(ncols, exact_zero(p_));
      winner[c] = PadicApprox::from_parts(p_, 1, vx, kInfinite);
      for (std::size_t j = c + 1; j < ncols; ++j) {
        winner[j] = add(mul(ea, carried[j], kInfinite), mul(eb, rows_[c][j], kInfinite),
                        kInfinite);
        loser[j] = sub(mul(eu, rows_[c][j], kInfinite), mul(es, carried[j], kInfinite),
                       kInfinite);
      }
      const bool combined_taint = carried_taint || taint_[c];
      rows_[c] = std::move(winner);
      taint_[c] = combined_taint;
      carried = std::move(loser);
      carried_taint = combined_taint;
      lc_reduce_row_tail_(rows_[c], c + 1);
      lc_reduce_row_tail_(carried, c + 1);
      // The pivot of column c shrank from kc to vx: re-canonicalize the rows
      // above against it (corrections ripple right inside the tail call).
      for (std::size_t i = 0; i < c; ++i) lc_reduce_row_tail_(rows_[i], c);
    }
  }
  // The leftover generator is dependent: by construction every entry is zero.
  assert(std::all_of(carried.begin(), carried.end(),
                     [](const PadicApprox& e) { return e.is_zero_rep(); }));
}

void PrecisionModule::lf_delete_(std::size_t pos) {
  for (auto& row : frows_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pos));
  const std::size_t ncols = cols_.size() - 1;

  std::size_t f = frows_.size();
  for (std::size_t i = 0; i < fpivot_.size(); ++i)
    if (fpivot_[i] == pos) f = i;
  for (auto& q : fpivot_)
    if (q > pos) --q;
  if (f == frows_.size()) return;  // not a pivot variable: column drop only

  std::vector<PadicFloat> floating = std::move(frows_[f]);
  frows_.erase(frows_.begin() + static_cast<std::ptrdiff_t>(f));
  fpivot_.erase(fpivot_.begin() + static_cast<std::ptrdiff_t>(f));

  std::size_t rpos = f;
  for (std::size_t c = pos; c < ncols; ++c) {
    const std::size_t q = rpos < fpivot_.size() ? fpivot_[rpos] : ncols;
    if (c < q) {
      if (!floating[c].is_zero()) {
        // The floating row found a pivot-free column: it slots in here and
        // the staircase is whole again.
        frows_.insert(frows_.begin() + static_cast<std::ptrdiff_t>(rpos), std::move(floating));
        fpivot_.insert(fpivot_.begin() + static_cast<std::ptrdiff_t>(rpos), c);
        return;
      }
      continue;
    }
    // Column c carries the pivot y of the next settled row; combine (x, y)
    // into a pivot of minimal exponent and float the other row onward.
    PadicFloat x = floating[c];
    if (!x.is_zero()) {
      std::vector<PadicFloat>& settled = frows_[rpos];
      const PadicFloat y = settled[c];
      if (x.exp() < y.exp()) {
        // The floating row has the smaller valuation: it takes this pivot and
        // the settled row (with its cell in column c eliminated) floats on.
        const PadicFloat t = float_div(y, x);
        for (std::size_t j = c + 1; j < ncols; ++j)
          settled[j] = float_sub(settled[j], float_mul(t, floating[j]));
        settled[c] = PadicFloat(p_, float_prec_);
        std::swap(settled, floating);
      } else {
        const PadicFloat t = float_div(x, y);
        for (std::size_t j = c + 1; j < ncols; ++j)
          floating[j] = float_sub(floating[j], float_mul(t, frows_[rpos][j]));
        floating[c] = PadicFloat(p_, float_prec_);
      }
    }
    ++rpos;
  }
  // Every entry of the floating row was consumed: the generator was dependent.
}

long PrecisionModule::precision_absolute(VariableId id) {
  flush_();
  const std::size_t pos = position_(id);
  long best = kInfinite;
  if (mode_ == Mode::LC) {
    for (const auto& row : rows_) best = std::min(best, row[pos].val());
  } else {
    for (const auto& row : frows_) best = std::min(best, row[pos].exp());
  }
  return best;
}

bool PrecisionModule::is_precision_capped(VariableId id) {
  if (mode_ != Mode::LC) throw UnsupportedInMode("is_precision_capped");
  flush_();
  const std::size_t pos = position_(id);
  long best = kInfinite;
  for (const auto& row : rows_) best = std::min(best, row[pos].val());
  bool tainted_hit = false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][pos].val() != best) continue;
    if (!taint_[i]) return false;
    tainted_hit = true;
  }
  return tainted_hit;
}

std::vector<std::vector<PadicApprox>> PrecisionModule::project_(
    const std::vector<VariableId>& ids) {
  flush_();
  std::vector<std::size_t> posn;
  posn.reserve(ids.size());
  for (VariableId id : ids) posn.push_back(position_(id));

  std::vector<std::vector<PadicApprox>> gens;
  if (mode_ == Mode::LC) {
    gens.reserve(rows_.size());
    for (const auto& row : rows_) {
      std::vector<PadicApprox> g;
      g.reserve(posn.size());
      for (std::size_t pos : posn) g.push_back(row[pos]);
      gens.push_back(std::move(g));
    }
  } else {
    gens.reserve(frows_.size());
    for (const auto& row : frows_) {
      std::vector<PadicApprox> g;
      g.reserve(posn.size());
      for (std::size_t pos : posn) {
        const PadicFloat& e = row[pos];
        g.push_back(e.is_zero() ? exact_zero(p_)
                                : PadicApprox::from_parts(p_, e.unit(), e.exp(), kInfinite));
      }
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

std::vector<std::vector<PadicApprox>> ppower_echelon(
    long p, std::vector<std::vector<PadicApprox>> rows, std::size_t ncols) {
  // Scale negative valuations away so everything is an integer.
  long smin = 0;
  for (const auto& row : rows)
    for (const auto& e : row)
      if (!e.is_zero_rep()) smin = std::min(smin, e.val());

  std::vector<std::vector<Int>> gens;
  for (const auto& row : rows) {
    std::vector<Int> g(ncols, Int(0));
    bool nonzero = false;
    for (std::size_t j = 0; j < ncols; ++j) {
      const PadicApprox& e = row[j];
      if (e.is_zero_rep()) continue;
      g[j] = e.unit() * pow_int(p, e.val() - smin);
      nonzero = true;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  if (ncols == 0) return {};

  // Fold the whole column into one pivot row with unimodular Bezout pairs.
  const auto fold_column = [p](std::vector<std::vector<Int>>& m, std::size_t top,
                               std::size_t col, const Int& modulus) {
    std::size_t lead = m.size();
    for (std::size_t i = top; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      if (lead == m.size()) {
        lead = i;
        continue;
      }
      Int a, b;
      const Int x = m[lead][col];
      const Int y = m[i][col];
      const Int g = ext_gcd(x, y, a, b);
      for (std::size_t j = col; j < m[lead].size(); ++j) {
        const Int r = a * m[lead][j] + b * m[i][j];
        const Int s = (x / g) * m[i][j] - (y / g) * m[lead][j];
        m[lead][j] = modulus == 0 ? r : ((r % modulus) + modulus) % modulus;
        m[i][j] = modulus == 0 ? s : ((s % modulus) + modulus) % modulus;
      }
    }
    if (lead != m.size() && lead != top) std::swap(m[lead], m[top]);
    return lead != m.size();
  };

  // Pass 1: rank check and a determinant-exponent bound for the working modulus.
  long det_exp = 0;
  {
    auto work = gens;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < work.size(); ++c) {
      if (!fold_column(work, r, c, Int(0))) continue;
      det_exp += int_val(p, work[r][c]);
      ++r;
    }
    if (r < ncols) throw DeficientRank();
  }

  // Pass 2: redo the fold with p^B axis rows present; every pivot then divides
  // p^B and is a pure power of p, and entries can be kept reduced mod p^B.
  const long B = det_exp + 1;
  const Int pB = pow_int(p, B);
  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<Int> axis(ncols, Int(0));
    axis[j] = pB;
    gens.push_back(std::move(axis));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    const bool found = fold_column(gens, r, c, pB);
    assert(found);
    (void)found;
    ++r;
  }
  gens.resize(ncols);  // the rest are exact zero rows now

  // Back-reduce entries above each pivot and drop the scaling.  Ascending
  // column order: the row operation for pivot c also changes columns > c of
  // the reduced row, so those must be canonicalized after, not before.
  for (std::size_t c = 1; c < ncols; ++c) {
    const Int& piv = gens[c][c];
    for (std::size_t i = 0; i < c; ++i) {
      Int q = gens[i][c] / piv;
      if (gens[i][c] - q * piv < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t j = c; j < ncols; ++j) gens[i][j] -= q * gens[c][j];
    }
  }

  std::vector<std::vector<PadicApprox>> out(ncols);
  for (std::size_t i = 0; i < ncols; ++i) {
    out[i].reserve(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      Int& e = gens[i][j];
      out[i].push_back(e == 0 ? PadicApprox::zero(p, kInfinite)
                              : shift(PadicApprox::exact(p, e), smin));
    }
  }
  return out;
}

std::vector<std::vector<Int>> PrecisionModule::precision_lattice(
    const std::vector<VariableId>& ids) {
  auto E = ppower_echelon(p_, project_(ids), ids.size());
  std::vector<std::vector<Int>> out(E.size());
  for (std::size_t i = 0; i < E.size(); ++i) {
    out[i].reserve(ids.size());
    for (const auto& e : E[i]) {
      if (!e.is_zero_rep() && e.val() < 0)
        throw std::domain_error("precision lattice entries are not integral here");
      out[i].push_back(e.lift());
    }
  }
  return out;
}

long PrecisionModule::number_of_diffused_digits(const std::vector<VariableId>& ids) {
  if (ids.empty()) return 0;
  auto E = ppower_echelon(p_, project_(ids), ids.size());
  long pivots = 0;
  for (std::size_t i = 0; i < E.size(); ++i) pivots += E[i][i].val();
  long mins = 0;
  for (std::size_t j = 0; j < ids.size(); ++j) {
    long m = kInfinite;
    for (std::size_t i = 0; i < E.size(); ++i)
      if (!E[i][j].is_zero_rep()) m = std::min(m, E[i][j].val());
    mins += m;
  }
  return pivots - mins;
}

const Instrumentation& PrecisionModule::instrumentation() {
  flush_();
  return stats_;
}

std::size_t PrecisionModule::live_count() {
  flush_();
  return cols_.size();
}

std::vector<VariableId> PrecisionModule::live_ids() {
  flush_();
  return cols_;
}

std::vector<std::vector<PadicApprox>> PrecisionModule::lattice_rows() {
  flush_();
  if (mode_ == Mode::LC) return rows_;
  std::vector<std::vector<PadicApprox>> out;
  out.reserve(frows_.size());
  for (const auto& row : frows_) {
    std::vector<PadicApprox> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.to_approx());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<bool> PrecisionModule::cap_taints() {
  flush_();
  return taint_;
}

void PrecisionModule::validate() {
  flush_();
  const auto fail = [](const std::string& why) { throw std::logic_error("echelon invariant: " + why); };
  const std::size_t n = cols_.size();
  if (col_pos_.size() != n) fail("column index out of sync");

  if (mode_ == Mode::LC) {
    if (rows_.size() != n || taint_.size() != n) fail("matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows_[i].size() != n) fail("ragged row");
      for (std::size_t j = 0; j < n; ++j) {
        const PadicApprox& e = rows_[i][j];
        if (!e.is_exact()) fail("entry lost exactness");
        if (i > j && !e.is_zero_rep()) fail("nonzero below the diagonal");
        if (i == j && (e.is_zero_rep() || e.unit() != 1 || is_infinite(e.val())))
          fail("pivot is not a pure power of p");
        if (i < j && !e.is_zero_rep()) {
          const long kj = lc_pivot_exp_(j);
          if (e.val() >= kj) fail("unreduced entry above a pivot");
          if (e.unit() <= 0 || e.unit() >= pow_int(p_, kj - e.val()))
            fail("entry not canonical modulo its column pivot");
        }
      }
    }
  } else {
    if (frows_.size() != fpivot_.size()) fail("pivot index out of sync");
    if (frows_.size() > n) fail("more rows than columns");
    for (std::size_t i = 0; i < frows_.size(); ++i) {
      if (frows_[i].size() != n) fail("ragged row");
      if (i > 0 && fpivot_[i] <= fpivot_[i - 1]) fail("pivot columns not increasing");
      if (fpivot_[i] >= n) fail("pivot column out of range");
      if (frows_[i][fpivot_[i]].is_zero()) fail("zero pivot entry");
      for (std::size_t j = 0; j < fpivot_[i]; ++j)
        if (!frows_[i][j].is_zero()) fail("nonzero entry left of a pivot");
    }
  }
}

}  // namespace padic
