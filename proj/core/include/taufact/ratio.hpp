#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace taufact {

/// Nonnegative exact rational in lowest terms, e.g. an elasticity.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    const std::uint64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::uint64_t num() const noexcept { return num_; }
  constexpr std::uint64_t den() const noexcept { return den_; }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) = default;
  friend constexpr bool operator<(const Ratio& a, const Ratio& b) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
  }
  friend constexpr bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

}  // namespace taufact
