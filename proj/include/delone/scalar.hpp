#pragma once

// Coordinate scalars. Two arithmetic modes share one value type:
//  - Rational: exact arbitrary-precision p/q, canonical (reduced) form.
//  - FloatGrid: IEEE double, identified by rounding to an epsilon-grid cell.
// The mode (and epsilon) is a property of the owning container/system, not of
// the individual value; comparators take a ScalarMode context.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace delone {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Multiplicity arithmetic exceeded the 2^63-1 cap.
struct BlowUpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ArithKind { Rational, FloatGrid };

struct ScalarMode {
  ArithKind kind = ArithKind::Rational;
  double epsilon = 1e-9;  // grid cell size, FloatGrid only

  static ScalarMode rational() { return {ArithKind::Rational, 0.0}; }
  static ScalarMode float_grid(double eps = 1e-9) {
    if (!(eps > 0)) throw ConfigError("epsilon must be positive");
    return {ArithKind::FloatGrid, eps};
  }
  bool operator==(const ScalarMode&) const = default;
};

// One coordinate. Holds whichever representation the mode dictates.
class Coord {
 public:
  Coord() : v_(Rat(0)) {}
  explicit Coord(Rat r) : v_(std::move(r)) {}
  explicit Coord(double f) : v_(f) {}
  static Coord from_int(long long n) { return Coord(Rat(n)); }

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  double flt() const { return std::get<double>(v_); }

  double to_double() const {
    return is_rational() ? static_cast<double>(rat()) : flt();
  }

  Coord operator+(const Coord& o) const { return bin(o, '+'); }
  Coord operator-(const Coord& o) const { return bin(o, '-'); }
  Coord operator*(const Coord& o) const { return bin(o, '*'); }
  Coord operator-() const {
    return is_rational() ? Coord(Rat(-rat())) : Coord(-flt());
  }

  // Exact representation equality (not grid identification).
  bool same_repr(const Coord& o) const { return v_ == o.v_; }

 private:
  Coord bin(const Coord& o, char op) const {
    if (is_rational() != o.is_rational())
      throw ConfigError("scalar mode mismatch in arithmetic");
    if (is_rational()) {
      switch (op) {
        case '+': return Coord(Rat(rat() + o.rat()));
        case '-': return Coord(Rat(rat() - o.rat()));
        default: return Coord(Rat(rat() * o.rat()));
      }
    }
    switch (op) {
      case '+': return Coord(flt() + o.flt());
      case '-': return Coord(flt() - o.flt());
      default: return Coord(flt() * o.flt());
    }
  }

  std::variant<Rat, double> v_;
};

// Grid cell index used for FloatGrid identification.
std::int64_t grid_index(double v, double epsilon);

// Three-way compare under a mode: rationals exactly, floats by grid cell.
int coord_compare(const Coord& a, const Coord& b, const ScalarMode& mode);

using Point = std::vector<Coord>;

int point_compare(const Point& a, const Point& b, const ScalarMode& mode);

struct PointLess {
  ScalarMode mode;
  bool operator()(const Point& a, const Point& b) const {
    return point_compare(a, b, mode) < 0;
  }
};

Point make_point(std::initializer_list<double> coords);
Point make_rational_point(std::initializer_list<Rat> coords);

double point_euclidean_norm(const Point& p);

std::string coord_to_string(const Coord& c);

// Parses "p/q", plain numbers, or affine-in-pi forms like "pi", "-pi",
// "2*pi", "pi+3", "pi-1/2". Pi forms are only legal in FloatGrid mode.
Coord parse_coord(const std::string& text, const ScalarMode& mode);

// Shortest round-trip decimal for doubles; "p/q" for rationals.
std::string format_double(double v);

}  // namespace delone
