#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ybekit/perm.hpp"
#include "ybekit/solution.hpp"

namespace ybekit {

/// Finite left brace held as explicit k x k tables over indexed elements.
///
/// Index 0 is the common neutral element of (B, +) and (B, .). The lambda
/// table is lambda(a, b) = a.b - a.
class FiniteBrace {
 public:
  using Index = std::uint32_t;
  static constexpr Index kZero = 0;
  static constexpr std::size_t kDefaultCap = 2048;

  /// Wraps raw tables without checking the brace axioms (see the check_*
  /// functions). Requires square tables of matching size whose neutral
  /// elements sit at index 0 and in which every row of mul and add is a
  /// permutation of the indices.
  static FiniteBrace from_tables(std::vector<Perm> elements, std::vector<Index> mul,
                                 std::vector<Index> add);

  std::size_t order() const noexcept { return k_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  std::optional<Index> index_of(const Perm& p) const;

  Index mul(Index a, Index b) const { return mul_[a * k_ + b]; }
  Index add(Index a, Index b) const { return add_[a * k_ + b]; }
  Index lambda(Index a, Index b) const { return lambda_[a * k_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index inv(Index a) const { return inv_[a]; }

  const std::vector<Index>& mul_table() const noexcept { return mul_; }
  const std::vector<Index>& add_table() const noexcept { return add_; }
  const std::vector<Index>& lambda_table() const noexcept { return lambda_; }

  /// lambda_a as a permutation of the k indices.
  Perm lambda_perm(Index a) const;

 private:
  FiniteBrace() = default;

  std::size_t k_ = 0;
  std::vector<Perm> elements_;
  std::vector<Index> mul_, add_, lambda_, neg_, inv_;
  std::unordered_map<Perm, Index> index_;
};

/// Outcome of an exhaustive identity check: first failing tuple on failure.
struct BraceCheck {
  bool ok = true;
  std::string what;
  std::vector<FiniteBrace::Index> counterexample;

  explicit operator bool() const noexcept { return ok; }
  static BraceCheck fail(std::string what, std::vector<FiniteBrace::Index> tuple) {
    return {false, std::move(what), std::move(tuple)};
  }
};

/// The left brace on the permutation group of a validated solution.
///
/// Multiplication is composition. Addition is grown from the additive
/// generators sigma_y by a + sigma_y = a o sigma_{a^-1(y)}, then every brace
/// invariant is verified; failures raise InvariantError. Groups larger than
/// `cap` raise ResourceError.
FiniteBrace brace_from_solution(const Solution& s, std::size_t cap = FiniteBrace::kDefaultCap);

/// (B, .) is a group, (B, +) an abelian group, sharing the neutral element 0.
BraceCheck check_group_tables(const FiniteBrace& b);

/// a.(b + c) + a == a.b + a.c on all k^3 triples.
BraceCheck check_brace_axiom(const FiniteBrace& b);

/// lambda(a, b) == a.b - a, each lambda_a is an automorphism of (B, +), and
/// lambda_{ab} == lambda_a o lambda_b.
BraceCheck check_lambda(const FiniteBrace& b);

/// a.b^-1 == a - lambda_{a.b^-1}(b) and
/// a - b == a + lambda_b(b^-1) == a.lambda_{a^-1}(lambda_b(b^-1)) == a.lambda_{a^-1 b}(b^-1)
/// on all pairs.
BraceCheck additive_identities_check(const FiniteBrace& b);

/// {a : a.b == a + b for all b}; cross-checked against ker(lambda).
std::vector<FiniteBrace::Index> socle(const FiniteBrace& b);
std::vector<FiniteBrace::Index> lambda_kernel(const FiniteBrace& b);

/// Additive subgroup stable under every lambda_a.
bool is_left_ideal(const FiniteBrace& b, const std::vector<FiniteBrace::Index>& subset);
/// Normal multiplicative subgroup stable under every lambda_a.
bool is_ideal(const FiniteBrace& b, const std::vector<FiniteBrace::Index>& subset);

/// add == mul (cross-checked: socle is everything).
bool is_trivial_brace(const FiniteBrace& b);

struct SylowDecomposition {
  std::vector<std::size_t> primes;                      ///< ascending
  std::vector<std::vector<FiniteBrace::Index>> parts;   ///< parts[i]: Sylow primes[i]-subgroup of (B,+)
};

/// Sylow subgroups of (B, +). Verifies orders, left-ideal property, pairwise
/// permutability B_i B_j == B_j B_i and B == B_1 ... B_k; throws
/// InvariantError on failure.
SylowDecomposition sylow_decomposition(const FiniteBrace& b);

/// For each pair of distinct parts and b_i in B_i, b_j in B_j: b_i.b_j has a
/// unique factorization a.c with a in B_j, c in B_i, and a == lambda_{b_i}(b_j).
/// Throws InvariantError when a factorization is missing or not unique.
BraceCheck decomp_check(const FiniteBrace& b, const SylowDecomposition& d);

/// Solution on the brace elements with sigma_a = lambda_a.
Solution associated_solution(const FiniteBrace& b);

/// lambda_g(sigma_x) == sigma_{g(x)} for every group element g and every x.
BraceCheck lambda_sigma_check(const Solution& s, const FiniteBrace& b);

/// For an irretractable solution, x -> sigma_x and g -> lambda_g form a
/// permutational isomorphism from its permutation group onto the group of the
/// associated brace solution. Throws DomainError on a retractable solution.
bool permutational_isomorphism_check(const Solution& s,
                                     std::size_t cap = FiniteBrace::kDefaultCap);

}  // namespace ybekit
