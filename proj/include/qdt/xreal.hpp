#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdt {

// Value in [0, inf]: an exact nonnegative rational in lowest terms, or +inf.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(std::int64_t n);  // NOLINT: integers convert implicitly

  static ExtReal ratio(std::int64_t num, std::int64_t den);
  static constexpr ExtReal infinity() {
    ExtReal r;
    r.inf_ = true;
    return r;
  }
  static ExtReal parse(std::string_view text);

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && num_ == 0; }
  std::int64_t num() const;
  std::int64_t den() const;

  std::string to_string() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.inf_ == b.inf_ && (a.inf_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  // inf * 0 = 0
  friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
  ExtReal& operator+=(const ExtReal& b) { return *this = *this + b; }

 private:
  bool inf_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const ExtReal kInf = ExtReal::infinity();

ExtReal add(const ExtReal& a, const ExtReal& b);
// (a - b)+ with inf - inf = 0
ExtReal truncated_sub(const ExtReal& a, const ExtReal& b);
// 0 -> 0, anything else -> inf
ExtReal scale_inf(const ExtReal& r);
// (a + b) / 2 for finite a, b
ExtReal midpoint(const ExtReal& a, const ExtReal& b);

inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtReal& r);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qdt
