#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "hpcoh/errors.hpp"
#include "hpcoh/sparse_matrix.hpp"

namespace hpcoh::sparse {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Number of minimum-count columns inspected when choosing a pivot.
constexpr std::size_t kMarkowitzCandidates = 8;

bool row_contains(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return it != row.end() && it->col == col;
}

const GaussianRational& row_value(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return it->value;
}

// Right-looking elimination. Columns >= pivot_cols (an appended right-hand
// side) are carried along but never chosen as pivots. After run(), each pivot
// row is normalized to 1 at its pivot column and contains only later pivot
// columns, free columns and carried columns.
class Eliminator {
 public:
  Eliminator(std::vector<SparseRow> rows, std::size_t pivot_cols)
      : rows_(std::move(rows)),
        pivot_cols_(pivot_cols),
        row_active_(rows_.size(), true),
        col_rows_(pivot_cols),
        col_count_(pivot_cols, 0),
        pivot_step_(pivot_cols, kNone) {
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r])
        if (e.col < pivot_cols_) {
          col_rows_[e.col].push_back(r);
          ++col_count_[e.col];
        }
  }

  void run() {
    while (true) {
      auto [r, c] = choose_pivot();
      if (r == kNone) break;
      eliminate(r, c);
    }
  }

  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pivots() const { return pivots_; }
  std::uint32_t pivot_step(std::uint32_t col) const { return pivot_step_[col]; }
  bool row_active(std::uint32_t r) const { return row_active_[r]; }

 private:
  std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
    // Collect the columns with the smallest nonzero counts.
    std::vector<std::pair<std::size_t, std::uint32_t>> cand;
    for (std::uint32_t c = 0; c < pivot_cols_; ++c) {
      if (pivot_step_[c] != kNone || col_count_[c] == 0) continue;
      if (col_count_[c] == 1) {
        cand.assign(1, {1, c});
        break;
      }
      cand.emplace_back(col_count_[c], c);
    }
    if (cand.empty()) return {kNone, kNone};
    std::size_t keep = std::min(kMarkowitzCandidates, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(keep), cand.end());
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::pair<std::uint32_t, std::uint32_t> best{kNone, kNone};
    bool best_simple = false;
    for (std::size_t i = 0; i < keep; ++i) {
      auto [count, c] = cand[i];
      compact_column(c);
      for (auto r : col_rows_[c]) {
        std::size_t cost = (rows_[r].size() - 1) * (count - 1);
        // Prefer unit pivots on ties: they introduce no new denominators.
        bool simple = row_value(rows_[r], c).is_one() || (-row_value(rows_[r], c)).is_one();
        if (cost < best_cost || (cost == best_cost && simple && !best_simple)) {
          best_cost = cost;
          best = {r, c};
          best_simple = simple;
        }
      }
      if (best_cost == 0) break;
    }
    return best;
  }

  // Drops stale row references (inactive rows or cancelled entries).
  void compact_column(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](std::uint32_t r) { return !row_active_[r] || !row_contains(rows_[r], c); }),
               list.end());
  }

  void eliminate(std::uint32_t pr, std::uint32_t pc) {
    SparseRow& prow = rows_[pr];
    GaussianRational inv = row_value(prow, pc).reciprocal();
    if (!inv.is_one())
      for (auto& e : prow) e.value *= inv;
    row_active_[pr] = false;
    for (const auto& e : prow)
      if (e.col < pivot_cols_) --col_count_[e.col];
    pivot_step_[pc] = static_cast<std::uint32_t>(pivots_.size());
    pivots_.emplace_back(pr, pc);

    compact_column(pc);
    std::vector<std::uint32_t> targets;
    targets.swap(col_rows_[pc]);
    for (auto r : targets) {
      if (r == pr || !row_active_[r]) continue;
      GaussianRational f = row_value(rows_[r], pc);
      axpy(r, f, prow);
    }
  }

  // rows_[r] -= f * prow, maintaining column counts and lists.
  void axpy(std::uint32_t r, const GaussianRational& f, const SparseRow& prow) {
    const SparseRow& row = rows_[r];
    SparseRow out;
    out.reserve(row.size() + prow.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < prow.size()) {
      if (j == prow.size() || (i < row.size() && row[i].col < prow[j].col)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || prow[j].col < row[i].col) {
        std::uint32_t c = prow[j].col;
        out.push_back({c, -(f * prow[j].value)});
        if (c < pivot_cols_) {
          ++col_count_[c];
          col_rows_[c].push_back(r);
        }
        ++j;
      } else {
        std::uint32_t c = row[i].col;
        GaussianRational v = row[i].value - f * prow[j].value;
        if (!v.is_zero()) {
          out.push_back({c, std::move(v)});
        } else if (c < pivot_cols_) {
          --col_count_[c];
        }
        ++i;
        ++j;
      }
    }
    rows_[r] = std::move(out);
  }

  std::vector<SparseRow> rows_;
  std::size_t pivot_cols_;
  std::vector<bool> row_active_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<std::uint32_t> pivot_step_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots_;
};

std::vector<SparseRow> copy_rows(const SparseMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  Eliminator el(copy_rows(m), m.cols());
  el.run();
  return el.pivots().size();
}

std::vector<SparseRow> kernel_basis(const SparseMatrix& m) {
  const std::size_t n = m.cols();
  Eliminator el(copy_rows(m), n);
  el.run();
  const auto& pivots = el.pivots();
  const auto& rows = el.rows();

  // users[c]: pivot steps whose row has an entry in column c (besides its own pivot).
  std::vector<std::vector<std::uint32_t>> users(n);
  for (std::uint32_t s = 0; s < pivots.size(); ++s)
    for (const auto& e : rows[pivots[s].first])
      if (e.col != pivots[s].second) users[e.col].push_back(s);

  std::vector<GaussianRational> x(n);
  std::vector<bool> touched(n, false);
  std::vector<bool> queued(pivots.size(), false);
  std::vector<SparseRow> basis;
  for (std::uint32_t f = 0; f < n; ++f) {
    if (el.pivot_step(f) != kNone) continue;
    std::vector<std::uint32_t> touched_cols{f};
    x[f] = GaussianRational(1);
    touched[f] = true;
    // Pivot steps only depend on later steps, so resolve them latest-first.
    std::priority_queue<std::uint32_t> pending;
    for (auto s : users[f]) {
      queued[s] = true;
      pending.push(s);
    }
    while (!pending.empty()) {
      std::uint32_t s = pending.top();
      pending.pop();
      auto [pr, pc] = pivots[s];
      GaussianRational acc;
      for (const auto& e : rows[pr])
        if (e.col != pc && touched[e.col] && !x[e.col].is_zero()) acc -= e.value * x[e.col];
      x[pc] = std::move(acc);
      touched[pc] = true;
      touched_cols.push_back(pc);
      if (x[pc].is_zero()) continue;
      for (auto u : users[pc])
        if (!queued[u]) {
          queued[u] = true;
          pending.push(u);
        }
    }
    std::sort(touched_cols.begin(), touched_cols.end());
    SparseRow v;
    for (auto c : touched_cols) {
      if (!x[c].is_zero()) v.push_back({c, x[c]});
      x[c] = GaussianRational();
      touched[c] = false;
    }
    std::fill(queued.begin(), queued.end(), false);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::dimension_mismatch,
                "right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m.rows()));
  const auto n = static_cast<std::uint32_t>(m.cols());
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    if (!b[r].is_zero()) row.push_back({n, b[r]});
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Eliminator el(std::move(rows), n);
  el.run();
  for (std::uint32_t r = 0; r < el.rows().size(); ++r)
    if (el.row_active(r) && !el.rows()[r].empty()) return {};  // only the rhs column can remain

  SolveResult res{true, Vector(n)};
  const auto& pivots = el.pivots();
  for (auto s = pivots.size(); s-- > 0;) {
    auto [pr, pc] = pivots[s];
    GaussianRational acc;
    for (const auto& e : el.rows()[pr]) {
      if (e.col == n)
        acc += e.value;
      else if (e.col != pc && !res.x[e.col].is_zero())
        acc -= e.value * res.x[e.col];
    }
    res.x[pc] = std::move(acc);
  }
  return res;
}

}  // namespace hpcoh::sparse
