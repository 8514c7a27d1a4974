#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ybekit/perm.hpp"
#include "ybekit/solution.hpp"

namespace ybekit {

/// A finite permutation group held as its full element list.
///
/// Elements are produced by breadth-first closure and the identity is always
/// element 0. Only suitable for small orders; closure stops with a
/// ResourceError once `cap` elements are exceeded.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Group generated by `generators` acting on {0, ..., degree-1}.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t cap = kDefaultCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  bool contains(const Perm& p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(const Perm& p) const;

 private:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements);

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t> index_;
};

/// The group generated by all sigma_x.
PermGroup permutation_group(const Solution& s, std::size_t cap = PermGroup::kDefaultCap);

using Partition = std::vector<std::vector<Point>>;

/// Orbits, each sorted, ordered by smallest point.
Partition orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Partition of the domain into equal-size blocks permuted by the group.
struct BlockSystem {
  Partition blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  /// Singletons or the whole domain.
  bool is_trivial() const { return blocks.size() <= 1 || block_size() == 1; }
};

/// True iff `bs` is a partition of the domain into equal-size blocks and every
/// group element maps each block onto a block.
bool is_block_system(const PermGroup& g, const BlockSystem& bs);

/// Finest block system with a and b in the same block (union-find closure
/// over the generators). Requires a transitive group and a != b.
BlockSystem minimal_block_containing(const PermGroup& g, Point a, Point b);

/// Transitive with no nontrivial block system. Degree 1 counts as primitive.
bool is_primitive(const PermGroup& g);

PermGroup stabilizer(const PermGroup& g, Point x);

/// Subgroup generated by all commutators.
PermGroup derived_subgroup(const PermGroup& g);

/// Derived series reaches the trivial group.
bool is_solvable(const PermGroup& g);

bool is_abelian(const PermGroup& g);

}  // namespace ybekit
