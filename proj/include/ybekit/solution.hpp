#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ybekit/perm.hpp"

namespace ybekit {

/// A candidate involutive set-theoretic solution r(x, y) = (sigma_x(y), gamma_y(x))
/// on X = {0, ..., n-1}. Only the sigma table is stored; gamma is always
/// derived as gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x).
///
/// Construction only checks structure (every row is a permutation of the same
/// degree n as the table). Use validate() for the solution axioms.
class Solution {
 public:
  /// Throws DomainError if the table is empty or a row has the wrong degree.
  explicit Solution(std::vector<Perm> sigma);

  static Solution one_point();
  /// sigma_x = id for all x; r(x, y) = (y, x).
  static Solution trivial(std::size_t n);
  /// sigma_x = pi for all x.
  static Solution permutation(const Perm& pi);

  std::size_t size() const noexcept { return sigma_.size(); }
  const Perm& sigma(Point x) const { return sigma_.at(x); }
  const Perm& sigma_inverse(Point x) const { return sigma_inv_.at(x); }
  const std::vector<Perm>& sigmas() const noexcept { return sigma_; }

  /// gamma_y(x). Throws DomainError on out-of-range points.
  Point gamma(Point y, Point x) const;

  /// r(x, y).
  std::pair<Point, Point> apply(Point x, Point y) const;

  friend bool operator==(const Solution& a, const Solution& b) { return a.sigma_ == b.sigma_; }
  friend auto operator<=>(const Solution& a, const Solution& b) { return a.sigma_ <=> b.sigma_; }

 private:
  std::vector<Perm> sigma_;
  std::vector<Perm> sigma_inv_;
};

/// Free-function spelling of Solution::gamma.
inline Point gamma_from_sigma(const Solution& s, Point y, Point x) { return s.gamma(y, x); }

struct ValidationReport {
  bool involutive = false;
  bool nondegenerate = false;
  bool braid = false;
  /// First (x, y) with r(r(x, y)) != (x, y).
  std::optional<std::array<Point, 2>> involutive_counterexample;
  /// First y whose gamma_y is not a bijection.
  std::optional<Point> degenerate_gamma;
  /// First (x, y, z) on which r12 r23 r12 and r23 r12 r23 differ.
  std::optional<std::array<Point, 3>> braid_counterexample;

  bool passes() const noexcept { return involutive && nondegenerate && braid; }
};

/// Checks r^2 = id on all pairs, bijectivity of every gamma_y, and the braid
/// relation on all n^3 triples by evaluating both sides.
ValidationReport validate(const Solution& s);

/// True iff the group generated by the sigma_x is transitive (n = 1 counts).
bool is_indecomposable(const Solution& s);

/// sigma_x != sigma_y for all x != y.
bool is_irretractable(const Solution& s);

/// Partition of X by equality of sigma_x.
struct SigmaClassPartition {
  std::vector<std::vector<Point>> classes;  ///< sorted; ordered by smallest member
  std::vector<std::size_t> class_of;        ///< class index for each point
  /// Every sigma_z maps each class onto a class.
  bool generator_invariant = false;
  /// First (z, class index) violating generator_invariant.
  std::optional<std::pair<Point, std::size_t>> violation;
};

SigmaClassPartition sigma_class_blocks(const Solution& s);

/// Retract on sigma-classes: sigma_[x]([y]) = [sigma_x(y)]. Classes are
/// numbered by smallest member.
Solution retract(const Solution& s);

/// Number of retractions needed to reach a one-point solution (the one-point
/// solution has level 0), or nullopt if the retraction stabilizes earlier.
std::optional<std::size_t> multipermutation_level(const Solution& s);

/// Relabel by the bijection f: sigma'_x = f o sigma_{f^-1(x)} o f^-1.
Solution relabel(const Solution& s, const Perm& f);

/// Lexicographically least sigma table over all relabelings.
///
/// Only relabelings that send row 0 to its least possible value are tried,
/// which keeps the cost near the size of a centralizer instead of n!.
Solution canonical_form(const Solution& s);

/// Same result as canonical_form by sweeping all n! relabelings. Used as the
/// reference route; throws DomainError for n > 10.
Solution canonical_form_exhaustive(const Solution& s);

bool are_isomorphic(const Solution& a, const Solution& b);

}  // namespace ybekit
