#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ybekit {

using Point = std::uint32_t;

/// Permutation of {0, ..., n-1} stored as its image list.
///
/// Values are immutable after construction. Composition is right-to-left:
/// compose(p, q)(i) == p(q(i)).
class Perm {
 public:
  /// Throws DomainError unless `images` is a bijection of {0, ..., size-1}.
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images);

  static Perm identity(std::size_t n);

  /// Build from disjoint cycles, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point at(Point i) const;

  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

  std::string to_string() const;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);

  std::vector<Point> images_;
};

/// (p o q)(i) = p(q(i)). Throws DomainError on a degree mismatch.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// g p g^-1.
Perm conjugate(const Perm& p, const Perm& g);

/// Cycle lengths in ascending order; fixed points appear as 1.
std::vector<std::size_t> cycle_type(const Perm& p);

/// True iff `images` is a bijection of {0, ..., images.size()-1}.
bool is_permutation(std::span<const Point> images) noexcept;

}  // namespace ybekit

template <>
struct std::hash<ybekit::Perm> {
  std::size_t operator()(const ybekit::Perm& p) const noexcept {
    std::size_t h = p.degree();
    for (auto v : p.images()) h = h * 1000003u ^ v;
    return h;
  }
};
