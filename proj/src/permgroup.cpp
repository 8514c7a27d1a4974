#include "ybekit/permgroup.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ybekit/disjoint_set.hpp"
#include "ybekit/error.hpp"

namespace ybekit {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  if (degree == 0) throw DomainError("group degree must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_set<Perm> seen{elements.front()};
  // Finite group: closing under left multiplication by generators suffices.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = compose(g, elements[head]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw ResourceError("group order exceeds cap of " + std::to_string(cap));
        elements.push_back(std::move(next));
      }
    }
  }

  if (degree <= 20) {
    unsigned long long fact = 1;
    for (std::size_t i = 2; i <= degree; ++i) fact *= i;
    if (fact % elements.size() != 0)
      throw InvariantError("group order does not divide degree factorial");
  }
  return PermGroup(degree, std::move(generators), std::move(elements));
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup permutation_group(const Solution& s, std::size_t cap) {
  std::vector<Perm> gens;
  for (const auto& p : s.sigmas())
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  return PermGroup::closure(s.size(), std::move(gens), cap);
}

namespace {

const std::vector<Perm>& acting_set(const PermGroup& g) {
  return g.generators().empty() ? g.elements() : g.generators();
}

Partition classes_of(DisjointSet& uf) {
  const std::size_t n = uf.size();
  std::vector<std::size_t> slot(n, n);
  Partition parts;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = uf.find(x);
    if (slot[root] == n) {
      slot[root] = parts.size();
      parts.emplace_back();
    }
    parts[slot[root]].push_back(static_cast<Point>(x));
  }
  return parts;
}

}  // namespace

Partition orbits(const PermGroup& g) {
  DisjointSet uf(g.degree());
  for (const auto& p : acting_set(g))
    for (Point x = 0; x < g.degree(); ++x) uf.unite(x, p(x));
  return classes_of(uf);
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool is_block_system(const PermGroup& g, const BlockSystem& bs) {
  const std::size_t n = g.degree();
  if (bs.blocks.empty()) return false;
  std::vector<std::size_t> block_of(n, bs.blocks.size());
  const std::size_t size = bs.blocks.front().size();
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    if (bs.blocks[b].size() != size || size == 0) return false;
    for (Point x : bs.blocks[b]) {
      if (x >= n || block_of[x] != bs.blocks.size()) return false;
      block_of[x] = b;
    }
  }
  if (std::count(block_of.begin(), block_of.end(), bs.blocks.size()) != 0) return false;
  for (const auto& p : g.elements()) {
    for (const auto& block : bs.blocks) {
      const std::size_t target = block_of[p(block.front())];
      for (Point x : block)
        if (block_of[p(x)] != target) return false;
    }
  }
  return true;
}

BlockSystem minimal_block_containing(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  if (a >= n || b >= n) throw DomainError("minimal_block_containing: point out of range");
  if (a == b) throw DomainError("minimal_block_containing: points must differ");
  if (!is_transitive(g)) throw DomainError("minimal_block_containing: group is not transitive");

  DisjointSet uf(n);
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  uf.unite(a, b);
  const auto& gens = acting_set(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (const auto& p : gens) {
      const auto u = static_cast<Point>(uf.find(p(x)));
      const auto v = static_cast<Point>(uf.find(p(y)));
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  BlockSystem bs{classes_of(uf)};
  if (!is_block_system(g, bs)) throw InvariantError("union-find closure produced a non-block partition");
  return bs;
}

bool is_primitive(const PermGroup& g) {
  if (g.degree() == 1) return true;
  if (!is_transitive(g)) return false;
  for (Point b = 1; b < g.degree(); ++b)
    if (minimal_block_containing(g, 0, b).blocks.size() > 1) return false;
  return true;
}

PermGroup stabilizer(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw DomainError("stabilizer: point out of range");
  std::vector<Perm> fixing;
  for (const auto& p : g.elements())
    if (p(x) == x && !p.is_identity()) fixing.push_back(p);
  PermGroup h = PermGroup::closure(g.degree(), std::move(fixing));

  std::size_t orbit_size = 0;
  for (const auto& orbit : orbits(g))
    if (std::find(orbit.begin(), orbit.end(), x) != orbit.end()) orbit_size = orbit.size();
  if (orbit_size * h.order() != g.order())
    throw InvariantError("orbit-stabilizer count mismatch");
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::unordered_set<Perm> commutators;
  const auto& els = g.elements();
  std::vector<Perm> inv;
  inv.reserve(els.size());
  for (const auto& e : els) inv.push_back(inverse(e));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      Perm c = compose(compose(inv[i], inv[j]), compose(els[i], els[j]));
      if (!c.is_identity()) commutators.insert(std::move(c));
    }
  std::vector<Perm> gens(commutators.begin(), commutators.end());
  std::sort(gens.begin(), gens.end());
  return PermGroup::closure(g.degree(), std::move(gens));
}

bool is_solvable(const PermGroup& g) {
  PermGroup cur = g;
  while (cur.order() > 1) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = acting_set(g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

}  // namespace ybekit
