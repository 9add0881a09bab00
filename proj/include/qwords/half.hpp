#ifndef QWORDS_HALF_HPP_
#define QWORDS_HALF_HPP_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace qwords {

/// Exact element of (1/2)Z. Genus values are half-integers: a connected sum
/// of g tori has genus g, a connected sum of g projective planes has genus
/// g/2, so non-orientable genera live at 1/2, 1, 3/2, ...
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT(implicit)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Whole part; only valid when is_integer().
  constexpr int to_int() const { return twice_ / 2; }
  constexpr double to_double() const { return twice_ / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(to_int());
    return std::to_string(twice_) + "/2";
  }

  /// Accepts "2", "1/2", "3/2", "0.5", "1.5", ...
  static std::optional<HalfInt> parse(const std::string& s);

 private:
  int twice_;
};

inline std::optional<HalfInt> HalfInt::parse(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den == 2) return from_twice(num);
      if (den == 1) return HalfInt(num);
      return std::nullopt;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      double v = std::stod(s);
      double tw = v * 2.0;
      int t = static_cast<int>(tw >= 0 ? tw + 0.5 : tw - 0.5);
      if (t != tw) return std::nullopt;
      return from_twice(t);
    }
    return HalfInt(std::stoi(s));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace qwords

#endif  // QWORDS_HALF_HPP_
