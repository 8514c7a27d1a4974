#include "ybekit/brace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ybekit/error.hpp"
#include "ybekit/permgroup.hpp"

namespace ybekit {

using Index = FiniteBrace::Index;

FiniteBrace FiniteBrace::from_tables(std::vector<Perm> elements, std::vector<Index> mul,
                                     std::vector<Index> add) {
  const std::size_t k = elements.size();
  if (k == 0 || mul.size() != k * k || add.size() != k * k)
    throw DomainError("brace tables must be k x k for k elements");
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Point> mrow(mul.begin() + r * k, mul.begin() + (r + 1) * k);
    std::vector<Point> arow(add.begin() + r * k, add.begin() + (r + 1) * k);
    if (!is_permutation(mrow) || !is_permutation(arow))
      throw DomainError("brace table row " + std::to_string(r) + " is not a permutation");
  }
  for (Index a = 0; a < k; ++a)
    if (mul[a] != a || mul[a * k] != a || add[a] != a || add[a * k] != a)
      throw DomainError("index 0 must be the neutral element of both operations");

  FiniteBrace b;
  b.k_ = k;
  b.elements_ = std::move(elements);
  b.mul_ = std::move(mul);
  b.add_ = std::move(add);
  b.neg_.assign(k, 0);
  b.inv_.assign(k, 0);
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c) {
      if (b.add_[a * k + c] == kZero) b.neg_[a] = c;
      if (b.mul_[a * k + c] == kZero) b.inv_[a] = c;
    }
  b.lambda_.resize(k * k);
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c) b.lambda_[a * k + c] = b.add(b.mul(a, c), b.neg_[a]);
  for (Index a = 0; a < k; ++a) b.index_.emplace(b.elements_[a], a);
  return b;
}

std::optional<Index> FiniteBrace::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Perm FiniteBrace::lambda_perm(Index a) const {
  return Perm(std::vector<Point>(lambda_.begin() + a * k_, lambda_.begin() + (a + 1) * k_));
}

namespace {

void require(const BraceCheck& c, const char* stage) {
  if (!c.ok) throw InvariantError(std::string("brace construction: ") + stage + " failed: " + c.what);
}

}  // namespace

FiniteBrace brace_from_solution(const Solution& s, std::size_t cap) {
  PermGroup g = permutation_group(s, cap);
  const std::size_t k = g.order();
  const std::size_t n = s.size();
  const auto& els = g.elements();

  std::vector<Index> mul(k * k);
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c) mul[a * k + c] = static_cast<Index>(*g.index_of(compose(els[a], els[c])));

  std::vector<Index> inv(k);
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c)
      if (mul[a * k + c] == 0) inv[a] = c;

  std::vector<Index> sigma_idx(n);
  for (Point y = 0; y < n; ++y) sigma_idx[y] = static_cast<Index>(*g.index_of(s.sigma(y)));

  // a + sigma_y = a . sigma_{a^-1(y)}
  auto add_generator = [&](Index a, Point y) {
    const Point pre = els[inv[a]](y);
    return mul[a * k + sigma_idx[pre]];
  };

  // Express each element as a sum of generators via BFS from 0.
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> parent(k, kNone);
  std::vector<Point> via(k, 0);
  std::vector<Index> order{0};
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Index a = order[head];
    for (Point y = 0; y < n; ++y) {
      const Index c = add_generator(a, y);
      if (parent[c] == kNone) {
        parent[c] = a;
        via[c] = y;
        order.push_back(c);
      }
    }
  }
  if (order.size() != k)
    throw InvariantError("brace construction: sigma_x do not generate the additive group");

  std::vector<Index> add(k * k);
  for (Index a = 0; a < k; ++a) {
    add[a * k] = a;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Index c = order[i];
      add[a * k + c] = add_generator(add[a * k + parent[c]], via[c]);
    }
  }

  FiniteBrace b = [&] {
    try {
      return FiniteBrace::from_tables(els, std::move(mul), std::move(add));
    } catch (const DomainError& e) {
      throw InvariantError(std::string("brace construction: ") + e.what());
    }
  }();
  require(check_group_tables(b), "group tables");
  require(check_brace_axiom(b), "brace axiom");
  require(check_lambda(b), "lambda map");
  return b;
}

BraceCheck check_group_tables(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  for (Index a = 0; a < k; ++a) {
    if (b.mul(a, 0) != a || b.mul(0, a) != a) return BraceCheck::fail("mul identity", {a});
    if (b.add(a, 0) != a || b.add(0, a) != a) return BraceCheck::fail("add identity", {a});
    if (b.mul(a, b.inv(a)) != 0 || b.mul(b.inv(a), a) != 0) return BraceCheck::fail("mul inverse", {a});
    if (b.add(a, b.neg(a)) != 0) return BraceCheck::fail("add inverse", {a});
    for (Index c = 0; c < k; ++c) {
      if (b.add(a, c) != b.add(c, a)) return BraceCheck::fail("add not commutative", {a, c});
      for (Index d = 0; d < k; ++d) {
        if (b.mul(b.mul(a, c), d) != b.mul(a, b.mul(c, d)))
          return BraceCheck::fail("mul not associative", {a, c, d});
        if (b.add(b.add(a, c), d) != b.add(a, b.add(c, d)))
          return BraceCheck::fail("add not associative", {a, c, d});
      }
    }
  }
  return {};
}

BraceCheck check_brace_axiom(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c)
      for (Index d = 0; d < k; ++d) {
        const Index lhs = b.add(b.mul(a, b.add(c, d)), a);
        const Index rhs = b.add(b.mul(a, c), b.mul(a, d));
        if (lhs != rhs) return BraceCheck::fail("a(b+c)+a != ab+ac", {a, c, d});
      }
  return {};
}

BraceCheck check_lambda(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  for (Index a = 0; a < k; ++a) {
    std::vector<Point> row(k);
    for (Index c = 0; c < k; ++c) {
      row[c] = b.lambda(a, c);
      if (b.lambda(a, c) != b.add(b.mul(a, c), b.neg(a)))
        return BraceCheck::fail("lambda_a(b) != ab - a", {a, c});
      for (Index d = 0; d < k; ++d) {
        if (b.lambda(a, b.add(c, d)) != b.add(b.lambda(a, c), b.lambda(a, d)))
          return BraceCheck::fail("lambda_a not additive", {a, c, d});
        if (b.lambda(b.mul(a, c), d) != b.lambda(a, b.lambda(c, d)))
          return BraceCheck::fail("lambda not a homomorphism", {a, c, d});
      }
    }
    if (!is_permutation(row)) return BraceCheck::fail("lambda_a not bijective", {a});
  }
  return {};
}

BraceCheck additive_identities_check(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  for (Index a = 0; a < k; ++a)
    for (Index c = 0; c < k; ++c) {
      const Index ac_inv = b.mul(a, b.inv(c));
      if (ac_inv != b.add(a, b.neg(b.lambda(ac_inv, c))))
        return BraceCheck::fail("ab^-1 != a - lambda_{ab^-1}(b)", {a, c});

      const Index diff = b.add(a, b.neg(c));
      const Index lam = b.lambda(c, b.inv(c));
      const Index chain1 = b.add(a, lam);
      const Index chain2 = b.mul(a, b.lambda(b.inv(a), lam));
      const Index chain3 = b.mul(a, b.lambda(b.mul(b.inv(a), c), b.inv(c)));
      if (diff != chain1 || diff != chain2 || diff != chain3)
        return BraceCheck::fail("a-b chain of equalities broken", {a, c});
    }
  return {};
}

std::vector<Index> lambda_kernel(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  std::vector<Index> out;
  for (Index a = 0; a < k; ++a) {
    bool trivial = true;
    for (Index c = 0; c < k && trivial; ++c) trivial = b.lambda(a, c) == c;
    if (trivial) out.push_back(a);
  }
  return out;
}

std::vector<Index> socle(const FiniteBrace& b) {
  const auto k = static_cast<Index>(b.order());
  std::vector<Index> out;
  for (Index a = 0; a < k; ++a) {
    bool in = true;
    for (Index c = 0; c < k && in; ++c) in = b.mul(a, c) == b.add(a, c);
    if (in) out.push_back(a);
  }
  if (out != lambda_kernel(b)) throw InvariantError("socle differs from ker(lambda)");
  return out;
}

namespace {

std::vector<bool> membership(const FiniteBrace& b, const std::vector<Index>& subset) {
  std::vector<bool> in(b.order(), false);
  for (Index a : subset) in.at(a) = true;
  return in;
}

bool lambda_stable(const FiniteBrace& b, const std::vector<Index>& subset,
                   const std::vector<bool>& in) {
  for (Index a = 0; a < b.order(); ++a)
    for (Index s : subset)
      if (!in[b.lambda(a, s)]) return false;
  return true;
}

}  // namespace

bool is_left_ideal(const FiniteBrace& b, const std::vector<Index>& subset) {
  const auto in = membership(b, subset);
  if (!in[0]) return false;
  for (Index s : subset)
    for (Index t : subset)
      if (!in[b.add(s, t)]) return false;
  return lambda_stable(b, subset, in);
}

bool is_ideal(const FiniteBrace& b, const std::vector<Index>& subset) {
  const auto in = membership(b, subset);
  if (!in[0]) return false;
  for (Index s : subset)
    for (Index t : subset)
      if (!in[b.mul(s, t)]) return false;
  for (Index g = 0; g < b.order(); ++g)
    for (Index s : subset)
      if (!in[b.mul(b.mul(g, s), b.inv(g))]) return false;
  return lambda_stable(b, subset, in);
}

bool is_trivial_brace(const FiniteBrace& b) {
  const bool tables_equal = b.add_table() == b.mul_table();
  if (tables_equal != (socle(b).size() == b.order()))
    throw InvariantError("trivial-brace tests disagree");
  return tables_equal;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t k) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    ps.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) ps.push_back(k);
  return ps;
}

std::size_t additive_order(const FiniteBrace& b, Index a) {
  std::size_t ord = 1;
  for (Index c = a; c != 0; c = b.add(c, a)) ++ord;
  return a == 0 ? 1 : ord;
}

std::vector<Index> product_set(const FiniteBrace& b, const std::vector<Index>& x,
                               const std::vector<Index>& y) {
  std::set<Index> out;
  for (Index u : x)
    for (Index v : y) out.insert(b.mul(u, v));
  return {out.begin(), out.end()};
}

}  // namespace

SylowDecomposition sylow_decomposition(const FiniteBrace& b) {
  SylowDecomposition d;
  const std::size_t k = b.order();
  d.primes = prime_factors(k);
  std::vector<std::size_t> ord(k);
  for (Index a = 0; a < k; ++a) ord[a] = additive_order(b, a);

  for (std::size_t p : d.primes) {
    std::size_t p_part = 1;
    for (std::size_t m = k; m % p == 0; m /= p) p_part *= p;
    std::vector<Index> part;
    for (Index a = 0; a < k; ++a) {
      std::size_t o = ord[a];
      while (o % p == 0) o /= p;
      if (o == 1) part.push_back(a);
    }
    if (part.size() != p_part)
      throw InvariantError("Sylow " + std::to_string(p) + "-part has order " +
                           std::to_string(part.size()) + ", expected " + std::to_string(p_part));
    if (!is_left_ideal(b, part))
      throw InvariantError("Sylow " + std::to_string(p) + "-part is not a left ideal");
    d.parts.push_back(std::move(part));
  }

  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (std::size_t j = i + 1; j < d.parts.size(); ++j)
      if (product_set(b, d.parts[i], d.parts[j]) != product_set(b, d.parts[j], d.parts[i]))
        throw InvariantError("Sylow parts do not permute multiplicatively");

  std::vector<Index> total{0};
  for (const auto& part : d.parts) total = product_set(b, total, part);
  if (total.size() != k) throw InvariantError("product of Sylow parts is not the whole brace");
  return d;
}

BraceCheck decomp_check(const FiniteBrace& b, const SylowDecomposition& d) {
  if (d.parts.size() < 2) return {};
  std::vector<std::vector<bool>> in;
  for (const auto& part : d.parts) in.push_back(membership(b, part));
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (std::size_t j = 0; j < d.parts.size(); ++j) {
      if (i == j) continue;
      for (Index bi : d.parts[i])
        for (Index bj : d.parts[j]) {
          const Index prod = b.mul(bi, bj);
          std::optional<Index> found;
          std::size_t count = 0;
          for (Index a : d.parts[j]) {
            if (in[i][b.mul(b.inv(a), prod)]) {
              found = a;
              ++count;
            }
          }
          if (count != 1)
            throw InvariantError("b_i b_j has " + std::to_string(count) +
                                 " factorizations a c with a in B_j, c in B_i");
          if (*found != b.lambda(bi, bj))
            return BraceCheck::fail("lambda_{b_i}(b_j) != a_{i,j}", {bi, bj});
        }
    }
  return {};
}

Solution associated_solution(const FiniteBrace& b) {
  std::vector<Perm> rows;
  rows.reserve(b.order());
  for (Index a = 0; a < b.order(); ++a) rows.push_back(b.lambda_perm(a));
  return Solution(std::move(rows));
}

BraceCheck lambda_sigma_check(const Solution& s, const FiniteBrace& b) {
  const auto n = static_cast<Point>(s.size());
  std::vector<Index> sigma_idx(n);
  for (Point x = 0; x < n; ++x) {
    auto idx = b.index_of(s.sigma(x));
    if (!idx) return BraceCheck::fail("sigma_x not a brace element", {x});
    sigma_idx[x] = *idx;
  }
  for (Index g = 0; g < b.order(); ++g)
    for (Point x = 0; x < n; ++x)
      if (b.lambda(g, sigma_idx[x]) != sigma_idx[b.elements()[g](x)])
        return BraceCheck::fail("lambda_g(sigma_x) != sigma_{g(x)}", {g, x});
  return {};
}

bool permutational_isomorphism_check(const Solution& s, std::size_t cap) {
  if (!is_irretractable(s))
    throw DomainError("permutational isomorphism check requires an irretractable solution");
  const FiniteBrace b = brace_from_solution(s, cap);
  const std::size_t k = b.order();
  const auto n = static_cast<Point>(s.size());

  // f1: x -> sigma_x, injective by irretractability.
  std::vector<Index> f1(n);
  for (Point x = 0; x < n; ++x) f1[x] = *b.index_of(s.sigma(x));
  std::set<Index> image(f1.begin(), f1.end());
  if (image.size() != n) return false;

  // f2: g -> lambda_g into the group of the associated solution.
  const PermGroup target = permutation_group(associated_solution(b), cap);
  std::vector<Perm> f2;
  f2.reserve(k);
  for (Index g = 0; g < k; ++g) {
    f2.push_back(b.lambda_perm(g));
    if (!target.contains(f2.back())) return false;
  }
  if (std::set<Perm>(f2.begin(), f2.end()).size() != k || target.order() != k) return false;
  for (Index g = 0; g < k; ++g)
    for (Index h = 0; h < k; ++h)
      if (f2[b.mul(g, h)] != compose(f2[g], f2[h])) return false;

  for (Index g = 0; g < k; ++g)
    for (Point x = 0; x < n; ++x)
      if (f1[b.elements()[g](x)] != f2[g](f1[x])) return false;
  return true;
}

}  // namespace ybekit
