#pragma once

#include <compare>
#include <cstdint>

namespace fusion {

// An element of Z/2.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int bit) : bit_(static_cast<std::uint8_t>(((bit % 2) + 2) % 2)) {}

  static constexpr Parity even() { return Parity(0); }
  static constexpr Parity odd() { return Parity(1); }

  constexpr int value() const { return bit_; }
  constexpr Parity flipped() const { return Parity(bit_ + 1); }

  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.bit_ + b.bit_); }
  friend constexpr Parity operator+(Parity a, int shift) { return Parity(a.bit_ + shift); }
  friend constexpr auto operator<=>(Parity, Parity) = default;

 private:
  std::uint8_t bit_ = 0;
};

}  // namespace fusion
