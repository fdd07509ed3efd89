#include "qdt/xreal.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace qdt {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("ExtReal: rational component exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtReal make(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("ExtReal: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw std::invalid_argument("ExtReal: negative value");
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return ExtReal::ratio(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

ExtReal::ExtReal(std::int64_t n) : num_(n) {
  if (n < 0) throw std::invalid_argument("ExtReal: negative value");
}

ExtReal ExtReal::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ExtReal: zero denominator");
  if ((num < 0) != (den < 0) && num != 0) throw std::invalid_argument("ExtReal: negative value");
  std::int64_t g = std::gcd(num, den);
  ExtReal r;
  r.num_ = num / g;
  r.den_ = den / g;
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  if (r.num_ == 0) r.den_ = 1;
  return r;
}

ExtReal ExtReal::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "+inf" || text == "∞") return infinity();
  auto slash = text.find('/');
  std::int64_t p = 0, q = 1;
  if (slash == std::string_view::npos) {
    p = parse_int(text);
  } else {
    p = parse_int(text.substr(0, slash));
    q = parse_int(text.substr(slash + 1));
  }
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (p < 0 || q < 0) throw ParseError("negative value '" + std::string(text) + "'");
  return ratio(p, q);
}

std::int64_t ExtReal::num() const {
  if (inf_) throw std::logic_error("ExtReal::num on infinity");
  return num_;
}

std::int64_t ExtReal::den() const {
  if (inf_) throw std::logic_error("ExtReal::den on infinity");
  return den_;
}

std::string ExtReal::to_string() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.inf_ || b.inf_) return ExtReal::infinity();
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == b.den_) return make(static_cast<i128>(a.num_) + b.num_, a.den_);
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
  if (a.is_zero() || b.is_zero()) return ExtReal();
  if (a.inf_ || b.inf_) return ExtReal::infinity();
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

ExtReal add(const ExtReal& a, const ExtReal& b) { return a + b; }

ExtReal truncated_sub(const ExtReal& a, const ExtReal& b) {
  if (b.is_infinite()) return ExtReal();
  if (a.is_infinite()) return ExtReal::infinity();
  if (a <= b) return ExtReal();
  if (b.is_zero()) return a;
  i128 n = static_cast<i128>(a.num()) * b.den() - static_cast<i128>(b.num()) * a.den();
  return make(n, static_cast<i128>(a.den()) * b.den());
}

ExtReal scale_inf(const ExtReal& r) { return r.is_zero() ? ExtReal() : ExtReal::infinity(); }

ExtReal midpoint(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) throw std::invalid_argument("midpoint of infinity");
  return (a + b) * ExtReal::ratio(1, 2);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& r) { return os << r.to_string(); }

}  // namespace qdt
