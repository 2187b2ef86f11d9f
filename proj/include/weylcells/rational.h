#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace wc {

// Exact rational with a 64-bit numerator/denominator. Magnitudes in this
// project stay tiny (weight coordinates, pairings), so no overflow guard
// beyond 128-bit intermediates.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(Rat a, Rat b) {
    return Rat(static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.den +
                                         static_cast<__int128>(b.num) * a.den),
               a.den * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return Rat(static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.den -
                                         static_cast<__int128>(b.num) * a.den),
               a.den * b.den);
  }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { return Rat(-num, den); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool is_integer() const { return den == 1; }
  bool is_positive_integer() const { return den == 1 && num > 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

}  // namespace wc
