#include "slength/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "slength/constructions.hpp"
#include "slength/errors.hpp"
#include "slength/linear_quotients.hpp"
#include "slength/transforms.hpp"

namespace slength {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

Monomial face_monomial(VarSet f, int n) {
  std::vector<int> e(n, 0);
  for (int j : varset_elements(f)) e[j - 1] = 1;
  return Monomial(std::move(e));
}

// Overflow-shy product of (cap_j + 1); anything past `limit` saturates.
unsigned long long window_size(const std::vector<int>& cap, unsigned long long limit) {
  unsigned long long prod = 1;
  for (int c : cap) {
    prod *= static_cast<unsigned long long>(c) + 1;
    if (prod > limit) return limit + 1;
  }
  return prod;
}

}  // namespace

RelativeComplex relative_complex(const QuotientModule& q) {
  if (!q.is_squarefree())
    throw std::domain_error("the relative complex needs a squarefree module");
  int n = q.vars();
  if (n > 20) throw SizeLimitError("face enumeration capped at 20 variables");
  RelativeComplex out{n, {}};
  for (VarSet f = 0; f < (VarSet{1} << n); ++f)
    if (q.member(face_monomial(f, n))) out.faces.push_back(f);
  return out;
}

std::vector<VarSet> facets(const RelativeComplex& complex) {
  if (complex.faces.empty()) throw std::domain_error("empty complex has no facets");
  std::vector<VarSet> out;
  for (VarSet f : complex.faces) {
    bool maximal = true;
    for (VarSet g : complex.faces)
      if (f != g && varset_subset(f, g)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

namespace {

std::vector<int> window_caps(const QuotientModule& q) {
  int n = q.vars();
  std::vector<int> cap(n, 1);
  for (const Monomial& g : q.upper().generators())
    for (int j = 1; j <= n; ++j) cap[j - 1] = std::max(cap[j - 1], g.exponent(j) + 1);
  for (const Monomial& g : q.lower().generators())
    for (int j = 1; j <= n; ++j) cap[j - 1] = std::max(cap[j - 1], g.exponent(j) + 1);
  return cap;
}

}  // namespace

CharacteristicGrid characteristic_grid(const QuotientModule& q) {
  std::vector<int> cap = window_caps(q);
  if (window_size(cap, 1ull << 22) > (1ull << 22))
    throw SizeLimitError("characteristic grid too large to enumerate");
  CharacteristicGrid out{cap, {}};
  std::vector<int> c(cap.size(), 0);
  while (true) {
    if (q.member(Monomial(c))) out.points.push_back(c);
    int j = static_cast<int>(cap.size()) - 1;
    while (j >= 0 && c[j] == cap[j]) c[j--] = 0;
    if (j < 0) break;
    ++c[j];
  }
  return out;
}

namespace {

// Axis-aligned boxes inside the window [0, cap]: coordinate j is either
// pinned at the bottom value or free over [bottom_j, cap_j].  A partition of
// the cell set into such boxes induces the Stanley decomposition that maps a
// box to x^bottom K[free], provided every coordinate sitting at its cap is
// treated as free; the constructor below never has to special-case the
// squarefree setting because there the caps are all 1 and a face's support
// is exactly its set of forced-free coordinates.
struct BoxChoice {
  int bottom = 0;  // cell index
  VarSet free = 0;
};

struct SharedBest {
  std::atomic<int> value{INT_MAX};
  std::mutex mu;
  std::vector<BoxChoice> boxes;
};

struct RootCandidate {
  int bottom = 0;
  VarSet free = 0;
  std::vector<int> points;
};

class IntervalSearch {
 public:
  IntervalSearch(const std::vector<std::vector<int>>& cells, std::vector<int> cap,
                 int min_top, bool exhaustive_tops, SharedBest* shared)
      : cells_(cells),
        cap_(std::move(cap)),
        n_(static_cast<int>(cap_.size())),
        min_top_(min_top),
        exhaustive_(exhaustive_tops || min_top > 0),
        shared_(shared),
        covered_(cells.size(), 0),
        uncovered_(static_cast<int>(cells.size())) {}

  void run(int threads) {
    if (threads <= 1) {
      solve();
      return;
    }
    std::vector<RootCandidate> cands;
    collect_ = &cands;
    solve();
    collect_ = nullptr;
    if (cands.empty()) return;  // infeasible at the root
    std::atomic<std::size_t> next{0};
    int workers = std::min<int>(threads, static_cast<int>(cands.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([this, &cands, &next] {
        IntervalSearch local(*this);
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= cands.size()) break;
          const RootCandidate& cand = cands[i];
          local.cover(cand.points);
          local.chosen_.push_back({cand.bottom, cand.free});
          local.solve();
          local.chosen_.pop_back();
          local.uncover(cand.points);
        }
      });
    for (std::thread& t : pool) t.join();
  }

 private:
  void solve() {
    if (uncovered_ == 0) {
      std::lock_guard<std::mutex> lock(shared_->mu);
      if (static_cast<int>(chosen_.size()) < shared_->value.load()) {
        shared_->value.store(static_cast<int>(chosen_.size()));
        shared_->boxes = chosen_;
      }
      return;
    }
    int have = static_cast<int>(chosen_.size());
    int best = shared_->value.load(std::memory_order_relaxed);
    if (have + 1 >= best) return;
    if (!collect_ && have + lower_bound() >= best) return;

    int c = first_uncovered();
    VarSet forced = 0;
    std::vector<int> optional;
    for (int j = 0; j < n_; ++j) {
      if (cells_[c][j] == cap_[j])
        forced |= var_bit(j + 1);
      else
        optional.push_back(j);
    }
    std::vector<int> pts{c};
    descend(c, optional, 0, forced, pts);
  }

  void descend(int c, const std::vector<int>& optional, std::size_t k, VarSet f,
               std::vector<int>& pts) {
    if (min_top_ > 0 &&
        std::popcount(f) + static_cast<int>(optional.size() - k) < min_top_)
      return;
    if (k == optional.size()) {
      leaf(c, optional, f, pts);
      return;
    }
    int j = optional[k];
    std::vector<int> extended;
    if (try_extend(pts, j, &extended)) descend(c, optional, k + 1, f | var_bit(j + 1), extended);
    descend(c, optional, k + 1, f, pts);
  }

  void leaf(int c, const std::vector<int>& optional, VarSet f, const std::vector<int>& pts) {
    if (std::popcount(f) < min_top_) return;
    if (!exhaustive_) {
      // Only inclusion-maximal boxes are branched on; the exhaustive knob
      // exists to cross-check this restriction.
      for (int j : optional)
        if (!varset_contains(f, j + 1) && try_extend(pts, j, nullptr)) return;
    }
    if (collect_) {
      collect_->push_back({c, f, pts});
      return;
    }
    cover(pts);
    chosen_.push_back({c, f});
    solve();
    chosen_.pop_back();
    uncover(pts);
  }

  // Points of box(c, f + j) not already in pts, all of which must be
  // uncovered cells; fills `extended` with pts plus the new points.
  bool try_extend(const std::vector<int>& pts, int j, std::vector<int>* extended) const {
    std::vector<int> fresh;
    std::vector<int> probe;
    for (int p : pts) {
      probe = cells_[p];
      for (int v = probe[j] + 1; v <= cap_[j]; ++v) {
        probe[j] = v;
        auto it = std::lower_bound(cells_.begin(), cells_.end(), probe);
        if (it == cells_.end() || *it != probe) return false;
        int idx = static_cast<int>(it - cells_.begin());
        if (covered_[idx]) return false;
        fresh.push_back(idx);
      }
    }
    if (extended) {
      *extended = pts;
      extended->insert(extended->end(), fresh.begin(), fresh.end());
    }
    return true;
  }

  int first_uncovered() const {
    for (std::size_t i = 0; i < covered_.size(); ++i)
      if (!covered_[i]) return static_cast<int>(i);
    return -1;
  }

  // Any box has a unique componentwise-maximal cell, so the number of
  // dominance-maximal uncovered cells bounds the remaining box count from
  // below.
  int lower_bound() const {
    maxima_.clear();
    for (int i = static_cast<int>(cells_.size()) - 1; i >= 0; --i) {
      if (covered_[i]) continue;
      bool dominated = false;
      for (int m : maxima_) {
        bool below = true;
        for (int j = 0; j < n_ && below; ++j)
          if (cells_[i][j] > cells_[m][j]) below = false;
        if (below) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maxima_.push_back(i);
    }
    return static_cast<int>(maxima_.size());
  }

  void cover(const std::vector<int>& pts) {
    for (int p : pts) covered_[p] = 1;
    uncovered_ -= static_cast<int>(pts.size());
  }

  void uncover(const std::vector<int>& pts) {
    for (int p : pts) covered_[p] = 0;
    uncovered_ += static_cast<int>(pts.size());
  }

  const std::vector<std::vector<int>>& cells_;
  std::vector<int> cap_;
  int n_;
  int min_top_;
  bool exhaustive_;
  SharedBest* shared_;
  std::vector<char> covered_;
  int uncovered_;
  std::vector<BoxChoice> chosen_;
  std::vector<RootCandidate>* collect_ = nullptr;
  mutable std::vector<int> maxima_;
};

struct SearchOutcome {
  int value = INT_MAX;
  std::vector<StanleySpace> spaces;
};

SearchOutcome run_search(const std::vector<std::vector<int>>& cells,
                         const std::vector<int>& cap, int min_top,
                         const SolveOptions& options) {
  SharedBest shared;
  IntervalSearch search(cells, cap, min_top, options.exhaustive_tops, &shared);
  int threads = options.deterministic ? 1 : std::max(1, options.threads);
  search.run(threads);
  SearchOutcome out;
  out.value = shared.value.load();
  if (out.value == INT_MAX) return out;
  out.spaces.reserve(shared.boxes.size());
  for (const BoxChoice& b : shared.boxes)
    out.spaces.push_back({Monomial(cells[b.bottom]), b.free});
  return out;
}

std::vector<std::vector<int>> face_cells(const RelativeComplex& complex) {
  std::vector<std::vector<int>> cells;
  cells.reserve(complex.faces.size());
  for (VarSet f : complex.faces) {
    std::vector<int> c(complex.n, 0);
    for (int j : varset_elements(f)) c[j - 1] = 1;
    cells.push_back(std::move(c));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

void check_squarefree_budget(const QuotientModule& q, const SolveOptions& options) {
  if (!q.is_squarefree()) throw std::domain_error("squarefree modules only");
  if (q.vars() > options.budget.max_vars)
    throw SizeLimitError("variable count exceeds the budget");
}

}  // namespace

SlengthReport exact_slength_squarefree(const QuotientModule& q, const SolveOptions& options) {
  Stopwatch clock;
  check_squarefree_budget(q, options);
  RelativeComplex complex = relative_complex(q);
  if (complex.faces.size() > options.budget.max_faces)
    throw SizeLimitError("face count exceeds the budget");
  SearchOutcome got = run_search(face_cells(complex), std::vector<int>(complex.n, 1),
                                 0, options);
  SlengthReport report;
  report.lower = {got.value, "interval-partition"};
  report.upper = report.lower;
  report.exact = true;
  StanleyDecomposition witness{q, std::move(got.spaces)};
  canonicalize(witness);
  report.witness = std::move(witness);
  report.timings_ms["solve"] = clock.ms();
  return report;
}

std::optional<SlengthReport> constrained_min_length(const QuotientModule& q, int s,
                                                    const SolveOptions& options) {
  Stopwatch clock;
  check_squarefree_budget(q, options);
  if (s > q.vars()) return std::nullopt;
  RelativeComplex complex = relative_complex(q);
  if (complex.faces.size() > options.budget.max_faces)
    throw SizeLimitError("face count exceeds the budget");
  SearchOutcome got = run_search(face_cells(complex), std::vector<int>(complex.n, 1),
                                 std::max(s, 0), options);
  if (got.value == INT_MAX) return std::nullopt;
  SlengthReport report;
  report.lower = {got.value, "constrained-interval-partition"};
  report.upper = report.lower;
  report.exact = true;
  StanleyDecomposition witness{q, std::move(got.spaces)};
  canonicalize(witness);
  report.witness = std::move(witness);
  report.timings_ms["solve"] = clock.ms();
  return report;
}

SdepthResult sdepth_squarefree(const QuotientModule& q, const SolveOptions& options) {
  check_squarefree_budget(q, options);
  RelativeComplex complex = relative_complex(q);
  int start = q.vars();
  for (VarSet f : facets(complex))
    start = std::min(start, varset_size(f));
  for (int s = start; s >= 0; --s) {
    std::optional<SlengthReport> got = constrained_min_length(q, s, options);
    if (got) return {s, std::move(*got->witness)};
  }
  throw std::logic_error("a squarefree module always admits a partition");
}

GridResult grid_minimum(const QuotientModule& q, const SolveOptions& options) {
  std::vector<int> cap = window_caps(q);
  if (window_size(cap, options.budget.max_grid_points) >
      static_cast<unsigned long long>(options.budget.max_grid_points))
    throw SizeLimitError("characteristic grid exceeds the budget");
  CharacteristicGrid grid = characteristic_grid(q);
  SearchOutcome got = run_search(grid.points, grid.cap, 0, options);
  StanleyDecomposition witness{q, std::move(got.spaces)};
  canonicalize(witness);
  return {got.value, std::move(witness)};
}

namespace {

// Exhaustive memoized minimum over all interval partitions, written with
// none of the search-side machinery: no bounds, no maximality filter, no
// incumbent.  The uncovered cell set is a bitmask over at most 64 cells.
class OracleDp {
 public:
  OracleDp(std::vector<std::vector<int>> cells, std::vector<int> cap)
      : cells_(std::move(cells)), cap_(std::move(cap)), n_(static_cast<int>(cap_.size())) {}

  int minimum() {
    if (cells_.size() > 64) throw SizeLimitError("oracle capped at 64 cells");
    std::uint64_t full = cells_.size() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << cells_.size()) - 1;
    return rec(full);
  }

 private:
  int rec(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int c = std::countr_zero(mask);
    int best = INT_MAX;
    for (unsigned f = 0; f < (1u << n_); ++f) {
      bool canonical = true;
      for (int j = 0; j < n_; ++j)
        if (cells_[c][j] == cap_[j] && !((f >> j) & 1)) canonical = false;
      if (!canonical) continue;
      std::uint64_t bits = box_bits(c, f, mask);
      if (bits == 0) continue;
      best = std::min(best, 1 + rec(mask & ~bits));
    }
    memo_[mask] = best;
    return best;
  }

  // Bitmask of the box's cells, or 0 when some box point is not an
  // available cell.
  std::uint64_t box_bits(int c, unsigned f, std::uint64_t mask) const {
    std::vector<int> point = cells_[c];
    std::uint64_t bits = 0;
    while (true) {
      auto it = std::lower_bound(cells_.begin(), cells_.end(), point);
      if (it == cells_.end() || *it != point) return 0;
      int idx = static_cast<int>(it - cells_.begin());
      if (!((mask >> idx) & 1)) return 0;
      bits |= std::uint64_t{1} << idx;
      int j = n_ - 1;
      while (j >= 0) {
        if (((f >> j) & 1) && point[j] < cap_[j]) {
          ++point[j];
          break;
        }
        point[j] = cells_[c][j];
        --j;
      }
      if (j < 0) break;
    }
    return bits;
  }

  std::vector<std::vector<int>> cells_;
  std::vector<int> cap_;
  int n_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

int oracle_slength(const QuotientModule& q, OracleMode mode) {
  if (mode == OracleMode::kSquarefree) {
    if (!q.is_squarefree()) throw std::domain_error("squarefree oracle mode");
    if (q.vars() > 4) throw SizeLimitError("squarefree oracle capped at 4 variables");
    RelativeComplex complex = relative_complex(q);
    return OracleDp(face_cells(complex), std::vector<int>(complex.n, 1)).minimum();
  }
  if (q.vars() > 2) throw SizeLimitError("grid oracle capped at 2 variables");
  std::vector<int> cap = window_caps(q);
  for (int c : cap)
    if (c > 6) throw SizeLimitError("grid oracle capped at exponent 5");
  CharacteristicGrid grid = characteristic_grid(q);
  return OracleDp(grid.points, grid.cap).minimum();
}

namespace {

struct UpperCandidate {
  Bound bound;
  StanleyDecomposition witness;
};

void offer(std::optional<UpperCandidate>& best, Bound bound, StanleyDecomposition witness) {
  if (!best || bound.value < best->bound.value)
    best = UpperCandidate{std::move(bound), std::move(witness)};
}

SlengthReport exact_report(int value, const std::string& method,
                           StanleyDecomposition witness, SlengthReport base) {
  base.lower = {value, method};
  base.upper = base.lower;
  base.exact = true;
  canonicalize(witness);
  base.witness = std::move(witness);
  return base;
}

}  // namespace

SlengthReport slength_report(const QuotientModule& q, const SolveOptions& options) {
  Stopwatch total;
  SlengthReport report;
  const MonomialIdeal& j = q.upper();
  bool plain = q.is_plain_ideal();

  // Closed forms first; each settles the report outright.
  if (plain) {
    Stopwatch clock;
    if (j.is_unit()) {
      StanleyDecomposition d{q, {{Monomial::one(q.vars()), full_varset(q.vars())}}};
      report.timings_ms["formula"] = clock.ms();
      report.timings_ms["total"] = total.ms();
      return exact_report(1, "unit", std::move(d), std::move(report));
    }
    if (j.generator_count() == 1) {
      StanleyDecomposition d{q, {{j.generators()[0], full_varset(q.vars())}}};
      report.timings_ms["formula"] = clock.ms();
      report.timings_ms["total"] = total.ms();
      return exact_report(1, "principal", std::move(d), std::move(report));
    }
    if (q.vars() == 2) {
      FormulaResult got = formula_n2(j);
      report.timings_ms["formula"] = clock.ms();
      report.timings_ms["total"] = total.ms();
      return exact_report(got.value, "two-variable-formula", std::move(got.witness),
                          std::move(report));
    }
    if (j.generator_count() == 2) {
      FormulaResult got = formula_m2(j);
      report.timings_ms["formula"] = clock.ms();
      report.timings_ms["total"] = total.ms();
      return exact_report(got.value, "two-generator-formula", std::move(got.witness),
                          std::move(report));
    }
  }

  if (q.is_squarefree()) {
    try {
      Stopwatch clock;
      SolveOptions exact_options = options;
      exact_options.exhaustive_tops = true;
      SlengthReport got = exact_slength_squarefree(q, exact_options);
      got.timings_ms["solve"] = clock.ms();
      got.timings_ms["total"] = total.ms();
      return got;
    } catch (const SizeLimitError& e) {
      report.notes.push_back(std::string("exact solve skipped: ") + e.what());
    }
  }

  // Bounds, cheapest first.
  Bound lower{1, "trivial"};
  if (plain) lower = {j.generator_count(), "generator-count"};

  std::optional<UpperCandidate> upper;

  if (plain && !j.is_unit()) {
    Stopwatch clock;
    try {
      std::optional<std::vector<Monomial>> order = find_linear_order(j);
      if (order) {
        offer(upper, {j.generator_count(), "linear-quotients"},
              decomposition_from_order(j, *order));
      } else {
        report.notes.push_back("no linear-quotient order");
      }
    } catch (const SizeLimitError& e) {
      report.notes.push_back(std::string("linear-quotient search skipped: ") + e.what());
    }
    report.timings_ms["linear-quotients"] = clock.ms();

    Stopwatch janet_clock;
    StanleyDecomposition plain_janet = janet(j, false);
    StanleyDecomposition ranged_janet = janet(j, true);
    const StanleyDecomposition& better =
        ranged_janet.spaces.size() < plain_janet.spaces.size() ? ranged_janet : plain_janet;
    offer(upper, {static_cast<int>(better.spaces.size()), "janet"}, better);
    report.timings_ms["janet"] = janet_clock.ms();

    if (is_complete_intersection(j)) {
      Stopwatch ci_clock;
      StanleyDecomposition d = ci_decomposition(j);
      int len = static_cast<int>(d.spaces.size());
      offer(upper, {len, "complete-intersection"}, std::move(d));
      report.timings_ms["complete-intersection"] = ci_clock.ms();
    }
  }

  if (!plain && j.is_unit() && q.lower().generator_count() == 1 &&
      !q.lower().is_unit()) {
    Stopwatch clock;
    StanleyDecomposition d = principal_quotient(q.lower().generators()[0]);
    int len = static_cast<int>(d.spaces.size());
    offer(upper, {len, "principal-quotient"}, std::move(d));
    report.timings_ms["principal-quotient"] = clock.ms();
  }

  {
    Stopwatch clock;
    try {
      GridResult got = grid_minimum(q, options);
      offer(upper, {got.value, "grid-partition"}, std::move(got.witness));
    } catch (const SizeLimitError& e) {
      report.notes.push_back(std::string("grid partition skipped: ") + e.what());
    }
    report.timings_ms["grid"] = clock.ms();
  }

  if (!upper) throw SizeLimitError("no upper bound fits the budget");

  // Exact values of smaller modules bound this one from below: polarization
  // preserves lengths exactly and passing to radicals never raises them.
  // These truly must be exact, so the exhaustive search is forced on.
  SolveOptions exact_options = options;
  exact_options.exhaustive_tops = true;
  {
    Stopwatch clock;
    try {
      QuotientModule polar = polarize(q).first;
      SlengthReport sub = exact_slength_squarefree(polar, exact_options);
      if (sub.lower.value > lower.value) lower = {sub.lower.value, "polarization"};
    } catch (const SizeLimitError& e) {
      report.notes.push_back(std::string("polarization bound skipped: ") + e.what());
    }
    report.timings_ms["polarization"] = clock.ms();
  }
  if (!q.is_squarefree()) {
    Stopwatch clock;
    std::optional<QuotientModule> rad = radical_module(q);
    if (!rad) {
      report.notes.push_back("radical quotient vanishes");
    } else {
      try {
        SlengthReport sub = exact_slength_squarefree(*rad, exact_options);
        if (sub.lower.value > lower.value) lower = {sub.lower.value, "radical"};
      } catch (const SizeLimitError& e) {
        report.notes.push_back(std::string("radical bound skipped: ") + e.what());
      }
    }
    report.timings_ms["radical"] = clock.ms();
  }

  if (lower.value > upper->bound.value)
    throw std::logic_error("bound contradiction: lower exceeds upper");

  report.lower = lower;
  report.upper = upper->bound;
  report.exact = lower.value == upper->bound.value;
  canonicalize(upper->witness);
  report.witness = std::move(upper->witness);
  report.timings_ms["total"] = total.ms();
  return report;
}

ConjectureReport conjecture_experiment(int d1, int d2, int d3, int n,
                                       const SolveOptions& options) {
  if (!(1 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::invalid_argument("need 1 <= d1 <= d2 <= d3");
  if (n < d1 + d2 + d3)
    throw std::invalid_argument("need n >= d1 + d2 + d3 for disjoint supports");
  auto block = [&](int from, int count) {
    std::vector<int> e(n, 0);
    for (int j = from; j < from + count; ++j) e[j] = 1;
    return Monomial(std::move(e));
  };
  MonomialIdeal ideal(n, {block(0, d1), block(d1, d2), block(d1 + d2, d3)});
  SlengthReport got = exact_slength_squarefree(QuotientModule::plain_ideal(ideal), options);
  ConjectureReport out;
  out.d1 = d1;
  out.d2 = d2;
  out.d3 = d3;
  out.n = n;
  out.exact_value = got.lower.value;
  out.conjectured_value = std::min(d1 + d1 * d2, n) + 1;
  out.matches = out.exact_value == out.conjectured_value;
  return out;
}

}  // namespace slength
