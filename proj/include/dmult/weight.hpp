#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace dmult {

inline constexpr int kMaxRank = 4;

// Integral weight, coordinates on the fundamental weights.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank) : rank_(static_cast<std::uint8_t>(rank)) {}
  Weight(std::initializer_list<int> coords);
  explicit Weight(std::span<const int> coords);

  static Weight zero(int rank) { return Weight(rank); }
  static Weight fundamental(int rank, int i) {
    Weight w(rank);
    w.c_[i] = 1;
    return w;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), rank_}; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(int k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  Weight operator-() const {
    Weight r = *this;
    r *= -1;
    return r;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "-1,2"
  std::string to_string() const;

 private:
  std::array<int, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

// Parses comma-separated integers; throws ParseError.
Weight parse_weight(std::string_view text);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.rank());
    for (int x : w.coords()) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

}  // namespace dmult
