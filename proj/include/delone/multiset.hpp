#pragma once

// Exact multiset algebra over points in R^d: the carrier for the families
// S^(k) and X_i. Entries map point -> positive multiplicity; absent means 0.
// Iteration order is canonical (lexicographic on coordinates), so output and
// parallel reductions are deterministic.

#include "delone/scalar.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>

namespace delone {

using Mult = std::uint64_t;
constexpr Mult kMultCap = std::numeric_limits<std::int64_t>::max();

inline Mult checked_mult_add(Mult a, Mult b) {
  Mult s = a + b;
  if (s < a || s > kMultCap) throw BlowUpError("multiplicity blow-up");
  return s;
}
inline Mult checked_mult_mul(Mult a, Mult b) {
  if (a != 0 && (b > kMultCap / a)) throw BlowUpError("multiplicity blow-up");
  return a * b;
}

class AdaptedNorm;  // system.hpp

class Multiset {
 public:
  using Map = std::map<Point, Mult, PointLess>;

  explicit Multiset(ScalarMode mode) : mode_(mode), entries_(PointLess{mode}) {}

  const ScalarMode& mode() const { return mode_; }

  bool empty() const { return entries_.empty(); }
  std::size_t distinct_size() const { return entries_.size(); }
  Mult total_multiplicity() const;
  Mult max_multiplicity() const;

  Mult multiplicity(const Point& p) const;

  // Adds m to the point's multiplicity. In FloatGrid mode, merging into an
  // occupied cell keeps the coordinatewise-min representative (schedule
  // independent) and ticks the collision counter when the incoming value is
  // farther than epsilon/10 from the representative in some coordinate.
  void add(const Point& p, Mult m = 1);

  // Removes m from the point (must not underflow).
  void remove(const Point& p, Mult m);

  std::uint64_t collisions() const { return collisions_; }

  const Map& entries() const { return entries_; }

  bool operator==(const Multiset& o) const;

  // Multiset union: multiplicities add (Eq. m_{X∨Y} = m_X + m_Y).
  friend Multiset union_of(const Multiset& x, const Multiset& y);
  // Multiset intersection: pointwise min, zero entries dropped.
  friend Multiset intersect(const Multiset& x, const Multiset& y);

  // In-place union.
  void merge(const Multiset& other);

  // true iff y <= x pointwise.
  bool contains(const Multiset& y) const;

  // ⋁_{d∈D} (A·X + d) with D's multiplicities respected. A is row-major d×d
  // over coordinates matching the mode.
  friend Multiset affine_image(const Multiset& x,
                               const std::vector<std::vector<Coord>>& a,
                               const Multiset& digits);

  // Entries with norm(p) <= radius. The norm handle is any callable giving a
  // real value per point (adapted norm or Euclidean).
  Multiset restrict_to_ball(const std::function<double(const Point&)>& norm,
                            double radius) const;

  // Points present here but absent (or with lower multiplicity) in prev;
  // returns the count of strictly new distinct points.
  std::size_t new_points_vs(const Multiset& prev) const;

 private:
  void check_mode(const Multiset& o) const {
    if (!(mode_ == o.mode_)) throw ConfigError("multiset scalar mode mismatch");
  }

  ScalarMode mode_;
  Map entries_;
  std::uint64_t collisions_ = 0;
};

class MultisetFamily {
 public:
  MultisetFamily(ScalarMode mode, std::size_t n)
      : mode_(mode), members_(n, Multiset(mode)) {}

  const ScalarMode& mode() const { return mode_; }
  std::size_t size() const { return members_.size(); }

  Multiset& operator[](std::size_t i) { return members_[i]; }
  const Multiset& operator[](std::size_t i) const { return members_[i]; }

  bool empty() const;
  Mult total_multiplicity() const;
  Mult max_multiplicity() const;
  std::size_t distinct_size() const;
  std::uint64_t collisions() const;

  bool operator==(const MultisetFamily& o) const { return members_ == o.members_; }

  void merge(const MultisetFamily& other);
  bool contains(const MultisetFamily& y) const;

  MultisetFamily restrict_to_ball(const std::function<double(const Point&)>& norm,
                                  double radius) const;

 private:
  ScalarMode mode_;
  std::vector<Multiset> members_;
};

MultisetFamily family_union(const MultisetFamily& a, const MultisetFamily& b);

// Multiset difference on multiplicity functions (a must contain b).
MultisetFamily family_subtract(const MultisetFamily& a, const MultisetFamily& b);

}  // namespace delone
