#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sfdt {

// Exact rational on int64. Denominators in the discharging schemes are tiny
// products of 2, 3 and 5, so no bignum is needed; normalization after every
// operation keeps the magnitudes small. Invariant: den > 0, gcd(|num|,den)=1.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

}  // namespace sfdt
