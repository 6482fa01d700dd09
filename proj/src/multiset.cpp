#include "delone/multiset.hpp"

#include <cmath>

namespace delone {

Mult Multiset::total_multiplicity() const {
  Mult t = 0;
  for (const auto& [p, m] : entries_) t = checked_mult_add(t, m);
  return t;
}

Mult Multiset::max_multiplicity() const {
  Mult t = 0;
  for (const auto& [p, m] : entries_)
    if (m > t) t = m;
  return t;
}

Mult Multiset::multiplicity(const Point& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

void Multiset::add(const Point& p, Mult m) {
  if (m == 0) return;
  auto [it, inserted] = entries_.emplace(p, m);
  if (inserted) return;
  it->second = checked_mult_add(it->second, m);
  if (mode_.kind == ArithKind::FloatGrid) {
    // Same grid cell, possibly a different double. Track genuine collisions
    // and keep the min representative so merge order never matters.
    const Point& rep = it->first;
    bool differs = false, lower = false;
    for (std::size_t i = 0; i < p.size(); i++) {
      if (std::abs(p[i].flt() - rep[i].flt()) > mode_.epsilon / 10.0)
        differs = true;
    }
    for (std::size_t i = 0; i < p.size(); i++) {
      double dv = p[i].flt(), rv = rep[i].flt();
      if (dv < rv) { lower = true; break; }
      if (dv > rv) break;
    }
    if (differs) collisions_++;
    if (lower) {
      Mult total = it->second;
      entries_.erase(it);
      entries_.emplace(p, total);
    }
  }
}

void Multiset::remove(const Point& p, Mult m) {
  auto it = entries_.find(p);
  if (it == entries_.end() || it->second < m)
    throw StateError("multiset subtraction underflow");
  it->second -= m;
  if (it->second == 0) entries_.erase(it);
}

bool Multiset::operator==(const Multiset& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end(); ++a, ++b) {
    if (a->second != b->second) return false;
    if (point_compare(a->first, b->first, mode_) != 0) return false;
  }
  return true;
}

Multiset union_of(const Multiset& x, const Multiset& y) {
  x.check_mode(y);
  Multiset r = x;
  r.merge(y);
  return r;
}

void Multiset::merge(const Multiset& other) {
  check_mode(other);
  for (const auto& [p, m] : other.entries_) add(p, m);
  collisions_ += other.collisions_;
}

Multiset intersect(const Multiset& x, const Multiset& y) {
  x.check_mode(y);
  Multiset r(x.mode_);
  for (const auto& [p, m] : x.entries_) {
    Mult my = y.multiplicity(p);
    Mult v = m < my ? m : my;
    if (v > 0) r.add(p, v);
  }
  return r;
}

bool Multiset::contains(const Multiset& y) const {
  check_mode(y);
  for (const auto& [p, m] : y.entries_)
    if (multiplicity(p) < m) return false;
  return true;
}

Multiset affine_image(const Multiset& x, const std::vector<std::vector<Coord>>& a,
                      const Multiset& digits) {
  x.check_mode(digits);
  Multiset r(x.mode_);
  if (x.empty() || digits.empty()) return r;
  std::size_t d = a.size();
  for (const auto& [p, m] : x.entries_) {
    if (p.size() != d) throw DimensionError("matrix/point dimension mismatch");
    Point ax(d);
    for (std::size_t i = 0; i < d; i++) {
      Coord acc = a[i][0] * p[0];
      for (std::size_t j = 1; j < d; j++) acc = acc + a[i][j] * p[j];
      ax[i] = acc;
    }
    for (const auto& [dig, md] : digits.entries()) {
      if (dig.size() != d) throw DimensionError("digit dimension mismatch");
      Point q(d);
      for (std::size_t i = 0; i < d; i++) q[i] = ax[i] + dig[i];
      r.add(q, checked_mult_mul(m, md));
    }
  }
  return r;
}

Multiset Multiset::restrict_to_ball(const std::function<double(const Point&)>& norm,
                                    double radius) const {
  Multiset r(mode_);
  for (const auto& [p, m] : entries_)
    if (norm(p) <= radius) r.add(p, m);
  return r;
}

std::size_t Multiset::new_points_vs(const Multiset& prev) const {
  std::size_t n = 0;
  for (const auto& [p, m] : entries_)
    if (prev.multiplicity(p) == 0) n++;
  return n;
}

bool MultisetFamily::empty() const {
  for (const auto& x : members_)
    if (!x.empty()) return false;
  return true;
}

Mult MultisetFamily::total_multiplicity() const {
  Mult t = 0;
  for (const auto& x : members_) t = checked_mult_add(t, x.total_multiplicity());
  return t;
}

Mult MultisetFamily::max_multiplicity() const {
  Mult t = 0;
  for (const auto& x : members_) t = std::max(t, x.max_multiplicity());
  return t;
}

std::size_t MultisetFamily::distinct_size() const {
  std::size_t t = 0;
  for (const auto& x : members_) t += x.distinct_size();
  return t;
}

std::uint64_t MultisetFamily::collisions() const {
  std::uint64_t t = 0;
  for (const auto& x : members_) t += x.collisions();
  return t;
}

void MultisetFamily::merge(const MultisetFamily& other) {
  if (size() != other.size()) throw DimensionError("family size mismatch");
  for (std::size_t i = 0; i < size(); i++) members_[i].merge(other[i]);
}

bool MultisetFamily::contains(const MultisetFamily& y) const {
  if (size() != y.size()) throw DimensionError("family size mismatch");
  for (std::size_t i = 0; i < size(); i++)
    if (!members_[i].contains(y[i])) return false;
  return true;
}

MultisetFamily MultisetFamily::restrict_to_ball(
    const std::function<double(const Point&)>& norm, double radius) const {
  MultisetFamily r(mode_, size());
  for (std::size_t i = 0; i < size(); i++)
    r[i] = members_[i].restrict_to_ball(norm, radius);
  return r;
}

MultisetFamily family_union(const MultisetFamily& a, const MultisetFamily& b) {
  MultisetFamily r = a;
  r.merge(b);
  return r;
}

MultisetFamily family_subtract(const MultisetFamily& a, const MultisetFamily& b) {
  if (a.size() != b.size()) throw DimensionError("family size mismatch");
  MultisetFamily r = a;
  for (std::size_t i = 0; i < a.size(); i++)
    for (const auto& [p, m] : b[i].entries()) r[i].remove(p, m);
  return r;
}

}  // namespace delone
