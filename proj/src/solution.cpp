#include "ybekit/solution.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ybekit/canonizer.hpp"
#include "ybekit/error.hpp"

namespace ybekit {

Solution::Solution(std::vector<Perm> sigma) : sigma_(std::move(sigma)) {
  if (sigma_.empty()) throw DomainError("solution must have at least one point");
  sigma_inv_.reserve(sigma_.size());
  for (const auto& p : sigma_) {
    if (p.degree() != sigma_.size())
      throw DomainError("sigma row has degree " + std::to_string(p.degree()) + ", expected " +
                        std::to_string(sigma_.size()));
    sigma_inv_.push_back(inverse(p));
  }
}

Solution Solution::one_point() { return trivial(1); }

Solution Solution::trivial(std::size_t n) {
  return Solution(std::vector<Perm>(n, Perm::identity(n)));
}

Solution Solution::permutation(const Perm& pi) {
  return Solution(std::vector<Perm>(pi.degree(), pi));
}

Point Solution::gamma(Point y, Point x) const {
  if (x >= size() || y >= size()) throw DomainError("gamma: point out of range");
  return sigma_inv_[sigma_[x](y)](x);
}

std::pair<Point, Point> Solution::apply(Point x, Point y) const {
  if (x >= size() || y >= size()) throw DomainError("r: point out of range");
  const Point u = sigma_[x](y);
  return {u, sigma_inv_[u](x)};
}

ValidationReport validate(const Solution& s) {
  const auto n = static_cast<Point>(s.size());
  ValidationReport rep;

  rep.involutive = true;
  for (Point x = 0; x < n && rep.involutive; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      if (s.apply(u, v) != std::pair{x, y}) {
        rep.involutive = false;
        rep.involutive_counterexample = std::array{x, y};
        break;
      }
    }
  }

  rep.nondegenerate = true;
  std::vector<Point> row(n);
  for (Point y = 0; y < n; ++y) {
    for (Point x = 0; x < n; ++x) row[x] = s.gamma(y, x);
    if (!is_permutation(row)) {
      rep.nondegenerate = false;
      rep.degenerate_gamma = y;
      break;
    }
  }

  rep.braid = true;
  auto r12 = [&](std::array<Point, 3> t) {
    auto [a, b] = s.apply(t[0], t[1]);
    return std::array{a, b, t[2]};
  };
  auto r23 = [&](std::array<Point, 3> t) {
    auto [b, c] = s.apply(t[1], t[2]);
    return std::array{t[0], b, c};
  };
  for (Point x = 0; x < n && rep.braid; ++x)
    for (Point y = 0; y < n && rep.braid; ++y)
      for (Point z = 0; z < n; ++z) {
        const std::array t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
          rep.braid = false;
          rep.braid_counterexample = t;
          break;
        }
      }
  return rep;
}

bool is_indecomposable(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (const auto& g : s.sigmas()) {
      Point q = g(p);
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == n;
}

bool is_irretractable(const Solution& s) {
  auto rows = s.sigmas();
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

SigmaClassPartition sigma_class_blocks(const Solution& s) {
  const auto n = static_cast<Point>(s.size());
  SigmaClassPartition part;
  part.class_of.assign(n, n);
  for (Point x = 0; x < n; ++x) {
    if (part.class_of[x] != n) continue;
    const std::size_t id = part.classes.size();
    part.classes.emplace_back();
    for (Point y = x; y < n; ++y) {
      if (part.class_of[y] == n && s.sigma(y) == s.sigma(x)) {
        part.class_of[y] = id;
        part.classes.back().push_back(y);
      }
    }
  }

  part.generator_invariant = true;
  for (Point z = 0; z < n && part.generator_invariant; ++z) {
    const Perm& g = s.sigma(z);
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      const auto& cls = part.classes[c];
      const std::size_t target = part.class_of[g(cls.front())];
      bool ok = part.classes[target].size() == cls.size();
      for (Point y : cls) ok = ok && part.class_of[g(y)] == target;
      if (!ok) {
        part.generator_invariant = false;
        part.violation = std::pair{z, c};
        break;
      }
    }
  }
  return part;
}

Solution retract(const Solution& s) {
  const auto part = sigma_class_blocks(s);
  const std::size_t m = part.classes.size();
  std::vector<Perm> rows;
  rows.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Perm& g = s.sigma(part.classes[a].front());
    std::vector<Point> images(m);
    for (std::size_t b = 0; b < m; ++b)
      images[b] = static_cast<Point>(part.class_of[g(part.classes[b].front())]);
    rows.emplace_back(std::move(images));
  }
  return Solution(std::move(rows));
}

std::optional<std::size_t> multipermutation_level(const Solution& s) {
  std::size_t level = 0;
  Solution cur = s;
  while (cur.size() > 1) {
    Solution next = retract(cur);
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
    ++level;
  }
  return level;
}

Solution relabel(const Solution& s, const Perm& f) {
  if (f.degree() != s.size()) throw DomainError("relabel: degree mismatch");
  const Perm finv = inverse(f);
  std::vector<Perm> rows;
  rows.reserve(s.size());
  for (Point x = 0; x < s.size(); ++x)
    rows.push_back(compose(compose(f, s.sigma(finv(x))), finv));
  return Solution(std::move(rows));
}

namespace {

std::vector<Point> flatten(const Solution& s) {
  std::vector<Point> table;
  table.reserve(s.size() * s.size());
  for (const auto& p : s.sigmas()) table.insert(table.end(), p.images().begin(), p.images().end());
  return table;
}

Solution unflatten(std::span<const Point> table, std::size_t n) {
  std::vector<Perm> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    rows.emplace_back(std::vector<Point>(table.begin() + x * n, table.begin() + (x + 1) * n));
  return Solution(std::move(rows));
}

// Relabeling-invariant fingerprint: sorted cycle types and sigma-class sizes.
auto invariants(const Solution& s) {
  std::vector<std::vector<std::size_t>> types;
  for (const auto& p : s.sigmas()) types.push_back(cycle_type(p));
  std::sort(types.begin(), types.end());
  std::vector<std::size_t> sizes;
  for (const auto& c : sigma_class_blocks(s).classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return std::pair{types, sizes};
}

}  // namespace

Solution canonical_form(const Solution& s) {
  const auto table = flatten(s);
  std::vector<Point> out(table.size());
  detail::Canonizer(s.size()).canonicalize(table, out);
  return unflatten(out, s.size());
}

Solution canonical_form_exhaustive(const Solution& s) {
  const std::size_t n = s.size();
  if (n > 10) throw DomainError("exhaustive canonical form limited to n <= 10");
  const auto table = flatten(s);
  std::vector<Point> f(n), finv(n);
  std::iota(f.begin(), f.end(), Point{0});
  std::vector<Point> best = table, cur(n * n);
  do {
    for (Point i = 0; i < n; ++i) finv[f[i]] = i;
    for (Point x = 0; x < n; ++x)
      for (Point c = 0; c < n; ++c) cur[x * n + c] = f[table[finv[x] * n + finv[c]]];
    if (cur < best) best = cur;
  } while (std::next_permutation(f.begin(), f.end()));
  return unflatten(best, n);
}

bool are_isomorphic(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) return false;
  if (invariants(a) != invariants(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ybekit
