#include "ybekit/canonizer.hpp"

#include <algorithm>
#include <limits>

namespace ybekit::detail {

namespace {
constexpr Point kUnset = std::numeric_limits<Point>::max();
}

Canonizer::Canonizer(std::size_t n)
    : n_(n),
      min_key_(n),
      key_scratch_(n),
      f_(n, kUnset),
      finv_(n, kUnset),
      labelled_(n, false),
      cycle_len_of_(n, 0),
      best_(n * n),
      all_known_(new bool[n]) {
  std::fill(all_known_.get(), all_known_.get() + n, true);
}

void Canonizer::row_key(std::span<const Point> row, Point x, std::span<Point> out) const {
  std::vector<Point> label(n_, kUnset);
  std::vector<std::size_t> len(n_, 0);
  std::vector<bool> seen(n_, false);
  for (Point i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    std::size_t l = 0;
    for (Point j = i; !seen[j]; j = row[j]) {
      seen[j] = true;
      ++l;
    }
    for (Point j = i;;) {
      len[j] = l;
      j = row[j];
      if (j == i) break;
    }
  }
  Point next = 0;
  for (Point j = x;;) {
    label[j] = next++;
    j = row[j];
    if (j == x) break;
  }
  for (std::size_t l = 1; next < n_; ++l) {
    for (Point i = 0; i < n_; ++i) {
      if (label[i] != kUnset || len[i] != l) continue;
      for (Point j = i;;) {
        label[j] = next++;
        j = row[j];
        if (j == i) break;
      }
    }
  }
  for (Point i = 0; i < n_; ++i) out[label[i]] = label[row[i]];
}

void Canonizer::compute_keys(std::span<const Point> table, std::span<const bool> known) {
  candidates_.clear();
  bool have_min = false;
  for (Point x = 0; x < n_; ++x) {
    if (!known[x]) continue;
    row_key(table.subspan(x * n_, n_), x, key_scratch_);
    if (!have_min || key_scratch_ < min_key_) {
      min_key_ = key_scratch_;
      candidates_.assign(1, x);
      have_min = true;
    } else if (key_scratch_ == min_key_) {
      candidates_.push_back(x);
    }
  }
}

template <class Visit>
bool Canonizer::label_cycles(std::span<const Point> row, std::size_t next_label,
                             std::size_t length_pos, Visit& visit) {
  if (length_pos == cycle_lengths_.size()) return visit();
  const std::size_t l = cycle_lengths_[length_pos];
  for (Point p = 0; p < n_; ++p) {
    if (labelled_[p] || cycle_len_of_[p] != l) continue;
    Point lab = static_cast<Point>(next_label);
    for (Point j = p;;) {
      labelled_[j] = true;
      f_[j] = lab;
      finv_[lab] = j;
      ++lab;
      j = row[j];
      if (j == p) break;
    }
    bool stop = label_cycles(row, next_label + l, length_pos + 1, visit);
    for (Point j = p;;) {
      labelled_[j] = false;
      j = row[j];
      if (j == p) break;
    }
    if (stop) return true;
  }
  return false;
}

template <class Visit>
bool Canonizer::for_each_labeling(std::span<const Point> table, Point x, Visit&& visit) {
  auto row = table.subspan(x * n_, n_);
  std::fill(labelled_.begin(), labelled_.end(), false);
  std::fill(cycle_len_of_.begin(), cycle_len_of_.end(), 0);
  cycle_lengths_.clear();
  for (Point i = 0; i < n_; ++i) {
    if (cycle_len_of_[i]) continue;
    std::size_t l = 0;
    for (Point j = i; !cycle_len_of_[j]; j = row[j]) {
      cycle_len_of_[j] = kUnset;  // provisional mark
      ++l;
    }
    for (Point j = i; cycle_len_of_[j] == kUnset; j = row[j]) cycle_len_of_[j] = l;
    cycle_lengths_.push_back(l);
  }
  // x's own cycle takes labels 0, 1, ...
  std::size_t next = 0;
  for (Point j = x;;) {
    labelled_[j] = true;
    f_[j] = static_cast<Point>(next);
    finv_[next] = j;
    ++next;
    j = row[j];
    if (j == x) break;
  }
  cycle_lengths_.erase(std::find(cycle_lengths_.begin(), cycle_lengths_.end(), next));
  std::sort(cycle_lengths_.begin(), cycle_lengths_.end());
  return label_cycles(row, next, 0, visit);
}

bool Canonizer::has_smaller_relabeling(std::span<const Point> table, std::span<const bool> known) {
  compute_keys(table, known);
  auto row0 = table.subspan(0, n_);
  if (!std::equal(min_key_.begin(), min_key_.end(), row0.begin())) return true;

  auto smaller = [&]() -> bool {
    for (Point r = 1; r < n_; ++r) {
      const Point src = finv_[r];
      if (!known[src] || !known[r]) return false;
      const Point* src_row = table.data() + src * n_;
      const Point* ref_row = table.data() + r * n_;
      for (Point c = 0; c < n_; ++c) {
        const Point v = f_[src_row[finv_[c]]];
        if (v < ref_row[c]) return true;
        if (v > ref_row[c]) return false;
      }
    }
    return false;
  };
  const auto candidates = candidates_;
  for (Point x : candidates)
    if (for_each_labeling(table, x, smaller)) return true;
  return false;
}

bool Canonizer::is_canonical(std::span<const Point> table) {
  return !has_smaller_relabeling(table, std::span<const bool>(all_known_.get(), n_));
}

void Canonizer::canonicalize(std::span<const Point> table, std::span<Point> out) {
  compute_keys(table, std::span<const bool>(all_known_.get(), n_));
  std::copy(min_key_.begin(), min_key_.end(), best_.begin());
  bool have_best = false;

  auto visit = [&]() -> bool {
    bool smaller = !have_best;
    for (Point r = 1; r < n_; ++r) {
      const Point* src_row = table.data() + finv_[r] * n_;
      Point* best_row = best_.data() + r * n_;
      for (Point c = 0; c < n_; ++c) {
        const Point v = f_[src_row[finv_[c]]];
        if (!smaller) {
          if (v > best_row[c]) return false;
          if (v < best_row[c]) smaller = true;
        }
        if (smaller) best_row[c] = v;
      }
    }
    have_best = true;
    return false;
  };
  const auto candidates = candidates_;
  for (Point x : candidates) for_each_labeling(table, x, visit);
  std::copy(best_.begin(), best_.end(), out.begin());
}

}  // namespace ybekit::detail
