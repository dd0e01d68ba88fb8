#include "permlab/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlab {

BigInt::BigInt(int64_t value) {
  negative_ = value < 0;
  uint64_t mag = negative_ ? ~static_cast<uint64_t>(value) + 1
                           : static_cast<uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<uint32_t>(mag));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(std::vector<uint32_t> const& a,
                    std::vector<uint32_t> const& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(std::vector<uint32_t> const& a,
                                      std::vector<uint32_t> const& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<uint32_t>(sum));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<uint32_t>(carry));
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(std::vector<uint32_t> const& a,
                                      std::vector<uint32_t> const& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t diff = static_cast<int64_t>(a[i]) - borrow -
                   (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += int64_t{1} << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(diff));
  }
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::operator+(BigInt const& other) const {
  BigInt out;
  if (negative_ == other.negative_) {
    out.negative_ = negative_;
    out.limbs_ = add_mag(limbs_, other.limbs_);
  } else {
    int c = cmp_mag(limbs_, other.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.negative_ = negative_;
      out.limbs_ = sub_mag(limbs_, other.limbs_);
    } else {
      out.negative_ = other.negative_;
      out.limbs_ = sub_mag(other.limbs_, limbs_);
    }
  }
  out.trim();
  return out;
}

BigInt BigInt::operator-(BigInt const& other) const { return *this + (-other); }

BigInt BigInt::operator*(BigInt const& other) const {
  if (is_zero() || other.is_zero()) return BigInt();
  BigInt out;
  out.negative_ = negative_ != other.negative_;
  out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < other.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] +
                     static_cast<uint64_t>(limbs_[i]) * other.limbs_[j] +
                     carry;
      out.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + other.limbs_.size();
    while (carry) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigInt BigInt::operator/(BigInt const& other) const {
  if (other.is_zero()) throw std::domain_error("BigInt division by zero");
  if (cmp_mag(limbs_, other.limbs_) < 0) return BigInt();
  // Schoolbook binary long division on magnitudes.
  BigInt quotient, remainder;
  quotient.limbs_.assign(limbs_.size(), 0);
  for (size_t bit = limbs_.size() * 32; bit-- > 0;) {
    // remainder = remainder * 2 + bit
    uint32_t carry = (limbs_[bit / 32] >> (bit % 32)) & 1u;
    for (size_t i = 0; i < remainder.limbs_.size(); ++i) {
      uint32_t next = remainder.limbs_[i] >> 31;
      remainder.limbs_[i] = (remainder.limbs_[i] << 1) | carry;
      carry = next;
    }
    if (carry) remainder.limbs_.push_back(carry);
    if (cmp_mag(remainder.limbs_, other.limbs_) >= 0) {
      remainder.limbs_ = sub_mag(remainder.limbs_, other.limbs_);
      remainder.trim();
      quotient.limbs_[bit / 32] |= uint32_t{1} << (bit % 32);
    }
  }
  quotient.negative_ = negative_ != other.negative_;
  quotient.trim();
  return quotient;
}

BigInt BigInt::operator%(BigInt const& other) const {
  return *this - (*this / other) * other;
}

std::strong_ordering operator<=>(BigInt const& a, BigInt const& b) {
  if (a.negative_ != b.negative_) {
    return a.negative_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
  if (a.negative_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  std::vector<uint32_t> mag = limbs_;
  while (!mag.empty()) {
    // Divide the magnitude by 10^9, collecting the remainder.
    uint64_t rem = 0;
    for (size_t i = mag.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

int64_t BigInt::to_int64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigInt too large");
  uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  if (negative_) {
    if (mag > static_cast<uint64_t>(INT64_MAX) + 1) {
      throw std::overflow_error("BigInt too large");
    }
    return static_cast<int64_t>(~mag + 1);
  }
  if (mag > static_cast<uint64_t>(INT64_MAX)) {
    throw std::overflow_error("BigInt too large");
  }
  return static_cast<int64_t>(mag);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace permlab
