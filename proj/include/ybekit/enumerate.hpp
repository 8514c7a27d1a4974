#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybekit/brace.hpp"
#include "ybekit/permgroup.hpp"
#include "ybekit/solution.hpp"

namespace ybekit {

/// Largest n enumerated without opt-in.
inline constexpr std::size_t kDefaultMaxN = 7;
/// Largest n enumerated at all (requires allow_large).
inline constexpr std::size_t kLargeMaxN = 8;
/// Largest n accepted by oracle_enumerate.
inline constexpr std::size_t kOracleMaxN = 4;
/// Largest n for which analyze() canonicalizes its input.
inline constexpr std::size_t kCanonicalizeMaxN = 10;

struct SolutionFlags {
  bool indecomposable = false;
  bool irretractable = false;
  bool primitive = false;
  std::optional<std::size_t> mpl;  ///< nullopt: not a multipermutation solution
  std::size_t group_order = 0;
  std::optional<bool> brace_trivial;  ///< absent when the brace was not built
};

/// One isomorphism class (or one analyzed solution) with its computed flags.
struct CatalogRecord {
  Solution sigma = Solution::one_point();
  bool canonical = false;  ///< sigma is the canonical form
  ValidationReport validation;
  std::optional<SolutionFlags> flags;  ///< absent for invalid input
  /// Named invariant checks run by analyze(); empty for enumeration records.
  std::map<std::string, bool> invariants;

  std::size_t n() const { return sigma.size(); }
  bool valid() const { return validation.passes(); }
};

struct AnalyzeOptions {
  std::size_t group_cap = PermGroup::kDefaultCap;
  std::size_t brace_cap = FiniteBrace::kDefaultCap;
  /// Build the brace to report brace_trivial.
  bool with_brace = true;
  bool run_invariants = true;
};

/// validate -> group -> flags -> brace, plus the invariant suite.
CatalogRecord analyze(const Solution& s, const AnalyzeOptions& opts = {});

/// Flags of a validated solution (no invariant suite).
SolutionFlags compute_flags(const Solution& s, const AnalyzeOptions& opts = {});

/// Exhaustive sweep of all (n!)^n sigma tables for n <= 4, bucketed by
/// exhaustive canonical form. Throws ResourceError for larger n.
std::vector<CatalogRecord> oracle_enumerate(std::size_t n, const AnalyzeOptions& opts = {});

struct EnumerateOptions {
  std::size_t threads = 1;
  bool allow_large = false;
  /// Wall-clock budget; exceeding it raises ResourceError.
  std::optional<double> time_budget_secs;
  /// Prune partial tables that some relabeling already makes smaller.
  bool prune_partial = true;
  AnalyzeOptions analyze;
};

struct EnumerateStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t work_units = 0;
};

/// Canonical representatives of every isomorphism class of solutions on n
/// points, sorted by sigma table. Independent of thread count.
std::vector<Solution> enumerate_canonical(std::size_t n, const EnumerateOptions& opts = {},
                                          EnumerateStats* stats = nullptr);

/// enumerate_canonical plus flags for each class.
std::vector<CatalogRecord> fast_enumerate(std::size_t n, const EnumerateOptions& opts = {},
                                          EnumerateStats* stats = nullptr);

struct ClassificationEntry {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::vector<CatalogRecord> primitive;
  std::size_t indecomposable = 0;
  std::size_t irretractable = 0;
  bool shape_ok = false;
  std::string diagnostic;
};

struct ClassificationReport {
  std::size_t n_max = 0;
  std::vector<ClassificationEntry> entries;  ///< one per n in 2..n_max
  bool ok() const;
};

/// For each n in 2..n_max, the primitive classes, checked against the
/// expected shape: none for composite n; for prime n exactly one class whose
/// sigma_x all equal a single n-cycle and whose group is cyclic of order n.
ClassificationReport classify_primitive(std::size_t n_max, const EnumerateOptions& opts = {});

/// Checks one primitive class of size n against the expected shape; returns
/// an empty string when it conforms.
std::string primitive_shape_violation(const CatalogRecord& rec);

}  // namespace ybekit
