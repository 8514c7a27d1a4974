#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ybekit/perm.hpp"

namespace ybekit::detail {

/// Lexicographic canonical labeling of square sigma tables.
///
/// The table is flat and row-major: table[x * n + y] = sigma_x(y). For any
/// relabeling f, row 0 of the relabeled table is a conjugate of some sigma_x
/// with x sent to 0, so the least table starts with the least such row
/// ("row key"). Only relabelings reaching that key need to be examined; they
/// form cosets of the centralizer of the key, enumerated here by choosing
/// cycle starting points.
///
/// Holds scratch buffers; one instance per thread.
class Canonizer {
 public:
  explicit Canonizer(std::size_t n);

  std::size_t degree() const noexcept { return n_; }

  /// Least conjugate of the permutation `row` that sends x to 0: the cycle of
  /// x labelled 0, 1, ..., then the remaining cycles by ascending length.
  void row_key(std::span<const Point> row, Point x, std::span<Point> out) const;

  /// Search for a relabeling whose table is lexicographically smaller than
  /// `table`, comparing only rows flagged in `known` (partial tables stop
  /// comparing at the first undetermined row). Row 0 must be known.
  bool has_smaller_relabeling(std::span<const Point> table, std::span<const bool> known);

  bool is_canonical(std::span<const Point> table);

  /// Writes the lexicographically least relabeled table into `out`.
  void canonicalize(std::span<const Point> table, std::span<Point> out);

 private:
  // Collects the rows whose key equals the minimum over known rows.
  void compute_keys(std::span<const Point> table, std::span<const bool> known);

  template <class Visit>
  bool for_each_labeling(std::span<const Point> table, Point x, Visit&& visit);

  template <class Visit>
  bool label_cycles(std::span<const Point> row, std::size_t next_label, std::size_t length_pos,
                    Visit& visit);

  std::size_t n_;
  std::vector<Point> min_key_;
  std::vector<Point> key_scratch_;
  std::vector<Point> candidates_;
  // labeling state
  std::vector<Point> f_;      // point -> label
  std::vector<Point> finv_;   // label -> point
  std::vector<bool> labelled_;
  std::vector<std::size_t> cycle_lengths_;  // ascending lengths still to place
  std::vector<std::size_t> cycle_len_of_;   // cycle length of each point in the current row
  std::vector<Point> best_;
  std::unique_ptr<bool[]> all_known_;
};

}  // namespace ybekit::detail
