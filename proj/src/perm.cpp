#include "ybekit/perm.hpp"

#include <algorithm>
#include <sstream>

#include "ybekit/error.hpp"

namespace ybekit {

bool is_permutation(std::span<const Point> images) noexcept {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("permutation degree must be at least 1");
  if (!is_permutation(images_)) throw DomainError("not a permutation: " + to_string());
}

Perm::Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> touched(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      if (from >= n || touched[from]) throw DomainError("cycles are not disjoint or out of range");
      touched[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Point Perm::at(Point i) const {
  if (i >= images_.size()) throw DomainError("point " + std::to_string(i) + " out of range");
  return images_[i];
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DomainError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm inverse(const Perm& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p.images_[i]] = static_cast<Point>(i);
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm conjugate(const Perm& p, const Perm& g) { return compose(compose(g, p), inverse(g)); }

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace ybekit
