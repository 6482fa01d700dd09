#include "delone/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace delone {

std::int64_t grid_index(double v, double epsilon) {
  double cell = v / epsilon;
  if (std::abs(cell) > 9.0e18)
    throw ConfigError("coordinate magnitude exceeds epsilon-grid range");
  return std::llround(cell);
}

int coord_compare(const Coord& a, const Coord& b, const ScalarMode& mode) {
  if (a.is_rational() != b.is_rational())
    throw ConfigError("scalar mode mismatch in comparison");
  if (mode.kind == ArithKind::Rational) {
    if (!a.is_rational()) throw ConfigError("rational mode holds float value");
    if (a.rat() < b.rat()) return -1;
    if (b.rat() < a.rat()) return 1;
    return 0;
  }
  std::int64_t ia = grid_index(a.flt(), mode.epsilon);
  std::int64_t ib = grid_index(b.flt(), mode.epsilon);
  return ia < ib ? -1 : (ia > ib ? 1 : 0);
}

int point_compare(const Point& a, const Point& b, const ScalarMode& mode) {
  if (a.size() != b.size())
    throw DimensionError("point dimension mismatch in comparison");
  for (std::size_t i = 0; i < a.size(); i++) {
    int c = coord_compare(a[i], b[i], mode);
    if (c != 0) return c;
  }
  return 0;
}

Point make_point(std::initializer_list<double> coords) {
  Point p;
  for (double c : coords) p.emplace_back(c);
  return p;
}

Point make_rational_point(std::initializer_list<Rat> coords) {
  Point p;
  for (const Rat& c : coords) p.emplace_back(c);
  return p;
}

double point_euclidean_norm(const Point& p) {
  double s = 0;
  for (const Coord& c : p) {
    double v = c.to_double();
    s += v * v;
  }
  return std::sqrt(s);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string coord_to_string(const Coord& c) {
  if (!c.is_rational()) return format_double(c.flt());
  const Rat& r = c.rat();
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace {

// Plain rational literal: integer, p/q, or decimal like -0.25.
bool parse_rat_literal(const std::string& t, Rat& out) {
  if (t.empty()) return false;
  auto slash = t.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(t.substr(0, slash));
      BigInt den(t.substr(slash + 1));
      if (den == 0) return false;
      out = Rat(num, den);
      return true;
    }
    auto dot = t.find('.');
    if (dot == std::string::npos) {
      out = Rat(BigInt(t));
      return true;
    }
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::size_t frac_len = t.size() - dot - 1;
    BigInt num(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; i++) den *= 10;
    out = Rat(num, den);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Coord parse_coord(const std::string& text, const ScalarMode& mode) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ConfigError("empty scalar");

  auto pi_pos = t.find("pi");
  if (pi_pos == std::string::npos) {
    Rat r;
    if (!parse_rat_literal(t, r)) throw ConfigError("bad scalar: " + text);
    if (mode.kind == ArithKind::Rational) return Coord(r);
    return Coord(static_cast<double>(r));
  }

  if (mode.kind == ArithKind::Rational)
    throw ConfigError("symbolic pi requires float arithmetic: " + text);

  // [c*]pi[±k]
  Rat coeff = 1;
  std::string head = t.substr(0, pi_pos);
  if (!head.empty()) {
    if (head == "-") {
      coeff = -1;
    } else if (head == "+") {
      coeff = 1;
    } else {
      if (head.back() != '*' || !parse_rat_literal(head.substr(0, head.size() - 1), coeff))
        throw ConfigError("bad scalar: " + text);
    }
  }
  Rat shift = 0;
  std::string tail = t.substr(pi_pos + 2);
  if (!tail.empty()) {
    char sign = tail[0];
    if ((sign != '+' && sign != '-') || !parse_rat_literal(tail.substr(1), shift))
      throw ConfigError("bad scalar: " + text);
    if (sign == '-') shift = -shift;
  }
  return Coord(static_cast<double>(coeff) * kPi + static_cast<double>(shift));
}

}  // namespace delone
