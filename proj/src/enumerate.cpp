#include "ybekit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "ybekit/canonizer.hpp"
#include "ybekit/error.hpp"

namespace ybekit {

namespace {

constexpr std::size_t kMax = kLargeMaxN;

// All permutations of {0..n-1} in lexicographic order, so that the Lehmer
// rank of a row is also its index, plus the rank of every row key.
class PermTable {
 public:
  explicit PermTable(std::size_t n) : n_(n) {
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do {
      perms_.insert(perms_.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
    factorial_.assign(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) factorial_[i] = factorial_[i - 1] * i;

    const std::size_t count = size();
    key_rank_.resize(count * n);
    detail::Canonizer canon(n);
    std::vector<Point> key(n);
    for (std::size_t i = 0; i < count; ++i)
      for (Point x = 0; x < n; ++x) {
        canon.row_key(row(i), x, key);
        key_rank_[i * n + x] = rank(key.data());
      }
  }

  std::size_t size() const { return factorial_[n_]; }
  std::span<const Point> row(std::size_t i) const { return {perms_.data() + i * n_, n_}; }

  std::uint32_t rank(const Point* row) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t smaller = 0;
      for (std::size_t j = i + 1; j < n_; ++j) smaller += row[j] < row[i];
      r += smaller * static_cast<std::uint32_t>(factorial_[n_ - 1 - i]);
    }
    return r;
  }

  /// Rank of the least conjugate of `row` that sends x to 0.
  std::uint32_t key_rank(std::uint32_t row_rank, Point x) const { return key_rank_[row_rank * n_ + x]; }

 private:
  std::size_t n_;
  std::vector<Point> perms_;
  std::vector<std::size_t> factorial_;
  std::vector<std::uint32_t> key_rank_;
};

// A top-level work unit: row 0 and (for n > 1) row 1.
struct Unit {
  std::uint32_t row0;
  std::uint32_t row1;
};

struct Shared {
  const PermTable& perms;
  std::size_t n;
  bool prune_partial;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<bool> out_of_time{false};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> leaves{0};
};

// Row-by-row backtracking over sigma tables.
//
// The table satisfies the axioms iff for all x, y
//   sigma_x o sigma_{x'} == sigma_y o sigma_{y'},  x' = sigma_x^-1(y), y' = sigma_y^-1(x).
// Whenever three of the four rows in such an equation are known the fourth is
// forced. Non-degeneracy makes x -> sigma_x^-1(x) injective. For isomorph
// rejection, row 0 is the least row key of the table, so every other row's
// key must not be smaller; canonicity is decided at the leaves.
class Search {
 public:
  explicit Search(Shared& shared) : sh_(shared), n_(shared.n), canon_(shared.n) {}

  void run(const Unit& unit, std::vector<std::vector<Point>>& out) {
    out_ = &out;
    std::fill(std::begin(known_), std::end(known_), false);
    diag_used_ = 0;
    trail_.clear();
    root_rank_ = unit.row0;
    check_deadline();
    if (!assign(0, sh_.perms.row(unit.row0).data(), true)) return;
    if (n_ > 1 && !assign(1, sh_.perms.row(unit.row1).data(), false)) return;
    if (!propagate()) return;
    if (!partial_ok()) return;
    dfs();
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  Point* sig(Point x) { return sig_.data() + x * n_; }
  Point* inv(Point x) { return inv_.data() + x * n_; }

  bool assign(Point x, const Point* row, bool is_root) {
    if (!is_root && sh_.perms.key_rank(sh_.perms.rank(row), x) < root_rank_) return false;
    Point diag = 0;
    while (row[diag] != x) ++diag;
    if (diag_used_ & (1u << diag)) return false;
    Point* s = sig(x);
    Point* si = inv(x);
    for (Point z = 0; z < n_; ++z) {
      s[z] = row[z];
      si[row[z]] = z;
    }
    known_[x] = true;
    diag_used_ |= 1u << diag;
    trail_.push_back(x);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Point x = trail_.back();
      trail_.pop_back();
      known_[x] = false;
      diag_used_ &= ~(1u << inv(x)[x]);
    }
  }

  bool propagate() {
    std::array<Point, kMax> row{};
    for (bool changed = true; changed;) {
      changed = false;
      for (Point x = 0; x < n_; ++x) {
        if (!known_[x]) continue;
        for (Point y = x + 1; y < n_; ++y) {
          if (!known_[y]) continue;
          const Point xp = inv(x)[y];
          const Point yp = inv(y)[x];
          if (xp == yp) {
            // sigma_x o sigma_w == sigma_y o sigma_w
            if (!std::equal(sig(x), sig(x) + n_, sig(y))) return false;
            continue;
          }
          const bool kx = known_[xp];
          const bool ky = known_[yp];
          if (kx && ky) {
            const Point *sx = sig(x), *sxp = sig(xp), *sy = sig(y), *syp = sig(yp);
            for (Point z = 0; z < n_; ++z)
              if (sx[sxp[z]] != sy[syp[z]]) return false;
          } else if (kx) {
            const Point *sx = sig(x), *sxp = sig(xp), *iy = inv(y);
            for (Point z = 0; z < n_; ++z) row[z] = iy[sx[sxp[z]]];
            if (!assign(yp, row.data(), false)) return false;
            changed = true;
          } else if (ky) {
            const Point *sy = sig(y), *syp = sig(yp), *ix = inv(x);
            for (Point z = 0; z < n_; ++z) row[z] = ix[sy[syp[z]]];
            if (!assign(xp, row.data(), false)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool partial_ok() {
    if (!sh_.prune_partial) return true;
    return !canon_.has_smaller_relabeling(std::span<const Point>(sig_.data(), n_ * n_),
                                          std::span<const bool>(known_.data(), n_));
  }

  void leaf() {
    ++leaves_;
    std::span<const Point> table(sig_.data(), n_ * n_);
    if (canon_.is_canonical(table)) out_->emplace_back(table.begin(), table.end());
  }

  void check_budget() {
    if ((++nodes_ & 0x3ff) != 0) return;
    check_deadline();
  }

  void check_deadline() {
    if (sh_.out_of_time.load(std::memory_order_relaxed)) throw ResourceError("time budget exceeded");
    if (sh_.deadline && std::chrono::steady_clock::now() > *sh_.deadline) {
      sh_.out_of_time = true;
      throw ResourceError("time budget exceeded");
    }
  }

  void dfs() {
    check_budget();
    Point x = 0;
    while (x < n_ && known_[x]) ++x;
    if (x == n_) {
      leaf();
      return;
    }
    const std::size_t mark = trail_.size();
    std::array<Point, kMax> row{};
    extend_row(x, 0, 0u, row, [&](const Point* candidate) {
      if (assign(x, candidate, false) && propagate() && partial_ok()) dfs();
      undo_to(mark);
    });
  }

  // Enumerates completions of row x cell by cell. A cell sigma_x(p) = q with
  // q known pins the whole row through the equation for the pair (x, q):
  //   sigma_x o sigma_p == sigma_q o sigma_w,  w = sigma_q^-1(x).
  template <class Visit>
  void extend_row(Point x, Point p, unsigned used, std::array<Point, kMax>& row, Visit&& visit) {
    if (p == n_) {
      visit(row.data());
      return;
    }
    std::array<Point, kMax> forced{};
    for (Point q = 0; q < n_; ++q) {
      if (used & (1u << q)) continue;
      row[p] = q;
      if (known_[q]) {
        const Point w = inv(q)[x];
        bool pinned = false;
        if (w == p) {
          std::copy(sig(q), sig(q) + n_, forced.begin());
          pinned = true;
        } else if (known_[p] && known_[w]) {
          const Point *sq = sig(q), *sw = sig(w), *ip = inv(p);
          for (Point z = 0; z < n_; ++z) forced[z] = sq[sw[ip[z]]];
          pinned = true;
        }
        if (pinned) {
          if (std::equal(row.begin(), row.begin() + p + 1, forced.begin())) visit(forced.data());
          continue;
        }
      }
      extend_row(x, p + 1, used | (1u << q), row, visit);
    }
  }

  Shared& sh_;
  std::size_t n_;
  detail::Canonizer canon_;
  std::array<Point, kMax * kMax> sig_{};
  std::array<Point, kMax * kMax> inv_{};
  std::array<bool, kMax> known_{};
  unsigned diag_used_ = 0;
  std::uint32_t root_rank_ = 0;
  std::vector<Point> trail_;
  std::vector<std::vector<Point>>* out_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

std::vector<Unit> make_units(const PermTable& perms, std::size_t n) {
  std::vector<Unit> units;
  for (std::uint32_t r0 = 0; r0 < perms.size(); ++r0) {
    if (perms.key_rank(r0, 0) != r0) continue;
    if (n == 1) {
      units.push_back({r0, 0});
      continue;
    }
    for (std::uint32_t r1 = 0; r1 < perms.size(); ++r1)
      if (perms.key_rank(r1, 1) >= r0) units.push_back({r0, r1});
  }
  return units;
}

Solution to_solution(std::span<const Point> table, std::size_t n) {
  std::vector<Perm> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    rows.emplace_back(std::vector<Point>(table.begin() + x * n, table.begin() + (x + 1) * n));
  return Solution(std::move(rows));
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

SolutionFlags compute_flags(const Solution& s, const AnalyzeOptions& opts) {
  SolutionFlags f;
  const PermGroup g = permutation_group(s, opts.group_cap);
  f.indecomposable = is_transitive(g);
  f.irretractable = is_irretractable(s);
  f.primitive = is_primitive(g);
  f.mpl = multipermutation_level(s);
  f.group_order = g.order();
  if (opts.with_brace && g.order() <= opts.brace_cap)
    f.brace_trivial = is_trivial_brace(brace_from_solution(s, opts.brace_cap));
  return f;
}

CatalogRecord analyze(const Solution& s, const AnalyzeOptions& opts) {
  CatalogRecord rec;
  rec.sigma = s;
  rec.validation = validate(s);
  if (!rec.validation.passes()) return rec;

  if (s.size() <= kCanonicalizeMaxN) {
    rec.sigma = canonical_form(s);
    rec.canonical = true;
  }
  rec.flags = compute_flags(s, opts);
  if (!opts.run_invariants) return rec;

  auto& inv = rec.invariants;
  const PermGroup g = permutation_group(s, opts.group_cap);
  const auto classes = sigma_class_blocks(s);
  inv["sigma_classes_generator_invariant"] = classes.generator_invariant;
  bool group_invariant = true;
  for (const auto& e : g.elements())
    for (Point x = 0; x < s.size(); ++x)
      for (Point t : classes.classes[classes.class_of[x]])
        group_invariant = group_invariant && s.sigma(e(t)) == s.sigma(e(x));
  inv["sigma_classes_group_invariant"] = group_invariant;
  inv["retract_validates"] = validate(retract(s)).passes();
  inv["solvable"] = is_solvable(g);
  inv["primitive_implies_transitive"] = !rec.flags->primitive || rec.flags->indecomposable;

  if (g.order() > opts.brace_cap) return rec;
  const FiniteBrace b = brace_from_solution(s, opts.brace_cap);
  inv["lambda_sigma"] = lambda_sigma_check(s, b).ok;
  inv["brace_axiom"] = check_brace_axiom(b).ok;
  inv["lambda_homomorphism"] = check_lambda(b).ok;
  inv["additive_identities"] = additive_identities_check(b).ok;
  const auto soc = socle(b);
  inv["socle_is_ideal"] = is_ideal(b, soc);
  const auto sylow = sylow_decomposition(b);
  inv["sylow_factorization"] = decomp_check(b, sylow).ok;
  inv["associated_solution_validates"] = validate(associated_solution(b)).passes();
  if (rec.flags->irretractable) {
    inv["socle_trivial"] = soc.size() == 1;
    inv["permutational_isomorphism"] = permutational_isomorphism_check(s, opts.brace_cap);
  }
  return rec;
}

std::vector<CatalogRecord> oracle_enumerate(std::size_t n, const AnalyzeOptions& opts) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (n > kOracleMaxN)
    throw ResourceError("oracle enumeration refuses n = " + std::to_string(n) + " (limit " +
                        std::to_string(kOracleMaxN) + ")");
  std::vector<Perm> perms;
  {
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do perms.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::set<Solution> classes;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Perm> rows;
    for (auto d : digit) rows.push_back(perms[d]);
    Solution s(std::move(rows));
    if (validate(s).passes()) classes.insert(canonical_form_exhaustive(s));
    std::size_t i = 0;
    while (i < n && ++digit[i] == perms.size()) digit[i++] = 0;
    if (i == n) break;
  }
  std::vector<CatalogRecord> out;
  for (const auto& s : classes) {
    CatalogRecord rec;
    rec.sigma = s;
    rec.canonical = true;
    rec.validation = validate(s);
    rec.flags = compute_flags(s, opts);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Solution> enumerate_canonical(std::size_t n, const EnumerateOptions& opts,
                                          EnumerateStats* stats) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (n > kLargeMaxN)
    throw ResourceError("enumeration is limited to n <= " + std::to_string(kLargeMaxN));
  if (n > kDefaultMaxN && !opts.allow_large)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the default budget; enable large runs");

  const PermTable perms(n);
  Shared shared{perms, n, opts.prune_partial, std::nullopt};
  if (opts.time_budget_secs)
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*opts.time_budget_secs));

  const std::vector<Unit> units = make_units(perms, n);
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::vector<std::vector<Point>> found;
  std::exception_ptr failure;

  auto worker = [&] {
    Search search(shared);
    std::vector<std::vector<Point>> local;
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < units.size();) search.run(units[i], local);
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
      shared.out_of_time = true;
    }
    shared.nodes += search.nodes();
    shared.leaves += search.leaves();
    std::lock_guard lock(merge_mutex);
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  };
  const std::size_t threads = std::max<std::size_t>(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(found.begin(), found.end());
  if (std::adjacent_find(found.begin(), found.end()) != found.end())
    throw InvariantError("enumeration produced the same canonical table twice");
  if (stats) *stats = {shared.nodes.load(), shared.leaves.load(), units.size()};

  std::vector<Solution> out;
  out.reserve(found.size());
  for (const auto& t : found) out.push_back(to_solution(t, n));
  return out;
}

std::vector<CatalogRecord> fast_enumerate(std::size_t n, const EnumerateOptions& opts,
                                          EnumerateStats* stats) {
  std::vector<CatalogRecord> out;
  for (auto& s : enumerate_canonical(n, opts, stats)) {
    CatalogRecord rec;
    rec.validation = validate(s);
    if (!rec.validation.passes())
      throw InvariantError("enumerated table fails validation: " + s.sigma(0).to_string());
    rec.flags = compute_flags(s, opts.analyze);
    rec.sigma = std::move(s);
    rec.canonical = true;
    out.push_back(std::move(rec));
  }
  return out;
}

std::string primitive_shape_violation(const CatalogRecord& rec) {
  const std::size_t n = rec.n();
  if (!is_prime(n)) return "primitive class on composite n = " + std::to_string(n);
  const Perm& first = rec.sigma.sigma(0);
  for (const auto& p : rec.sigma.sigmas())
    if (p != first) return "sigma_x not all equal";
  if (cycle_type(first) != std::vector<std::size_t>{n}) return "sigma is not an n-cycle";
  if (!rec.flags || rec.flags->group_order != n) return "group order differs from n";
  return {};
}

bool ClassificationReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.shape_ok; });
}

ClassificationReport classify_primitive(std::size_t n_max, const EnumerateOptions& opts) {
  if (n_max == 0) throw DomainError("n_max must be at least 1");
  ClassificationReport report;
  report.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n) {
    ClassificationEntry entry;
    entry.n = n;
    EnumerateOptions light = opts;
    light.analyze.with_brace = false;
    for (auto& rec : fast_enumerate(n, light)) {
      ++entry.classes;
      entry.indecomposable += rec.flags->indecomposable;
      entry.irretractable += rec.flags->irretractable;
      if (rec.flags->primitive) entry.primitive.push_back(std::move(rec));
    }
    const std::size_t expected = is_prime(n) ? 1 : 0;
    entry.shape_ok = entry.primitive.size() == expected;
    if (!entry.shape_ok)
      entry.diagnostic = std::to_string(entry.primitive.size()) + " primitive classes, expected " +
                         std::to_string(expected);
    for (const auto& rec : entry.primitive) {
      if (auto why = primitive_shape_violation(rec); !why.empty()) {
        entry.shape_ok = false;
        entry.diagnostic += (entry.diagnostic.empty() ? "" : "; ") + why;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace ybekit
