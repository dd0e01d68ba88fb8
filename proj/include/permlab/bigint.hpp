// Signed arbitrary-precision integers, sized for exact Smith normal form
// arithmetic on desk-scale matrices.  Sign-magnitude over base 2^32 limbs.

#ifndef PERMLAB_BIGINT_HPP_
#define PERMLAB_BIGINT_HPP_

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace permlab {

class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t value);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
  [[nodiscard]] bool is_negative() const { return negative_; }
  [[nodiscard]] BigInt abs() const;

  BigInt operator-() const;
  BigInt operator+(BigInt const& other) const;
  BigInt operator-(BigInt const& other) const;
  BigInt operator*(BigInt const& other) const;
  // Truncated division (rounds toward zero), like built-in integers.
  BigInt operator/(BigInt const& other) const;
  BigInt operator%(BigInt const& other) const;

  BigInt& operator+=(BigInt const& o) { return *this = *this + o; }
  BigInt& operator-=(BigInt const& o) { return *this = *this - o; }
  BigInt& operator*=(BigInt const& o) { return *this = *this * o; }

  friend bool operator==(BigInt const& a, BigInt const& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(BigInt const& a, BigInt const& b);

  [[nodiscard]] std::string to_string() const;
  // Throws std::overflow_error if the value does not fit.
  [[nodiscard]] int64_t to_int64() const;

  static BigInt gcd(BigInt a, BigInt b);

 private:
  static std::vector<uint32_t> add_mag(std::vector<uint32_t> const& a,
                                       std::vector<uint32_t> const& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(std::vector<uint32_t> const& a,
                                       std::vector<uint32_t> const& b);
  static int cmp_mag(std::vector<uint32_t> const& a,
                     std::vector<uint32_t> const& b);
  void trim();

  bool negative_ = false;
  std::vector<uint32_t> limbs_;  // little-endian; empty means zero
};

}  // namespace permlab

#endif  // PERMLAB_BIGINT_HPP_
