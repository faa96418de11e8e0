#pragma once

#include <cstdint>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkchev {

// Exact signed integer of unbounded magnitude.
// Little-endian limbs in base 10^9; no leading zero limbs; zero has no limbs.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
      m /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : sign_; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign() == b.sign() && a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign() != b.sign()) return a.sign() <=> b.sign();
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (a.sign() < 0) c = -c;
    return c <=> 0;
  }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.sign_ = a.sign_;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.sign_ = big.sign_;
      r.limbs_ = sub_mag(big.limbs_, small.limbs_);
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      size_t pos = i + b.limbs_.size();
      while (carry != 0) {
        std::uint64_t cur = r.limbs_[pos] + carry;
        r.limbs_[pos] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++pos;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  // Throws if the value does not fit.
  long long to_i64() const {
    long long v = 0;
    const long long base = static_cast<long long>(kBase);
    if (limbs_.size() > 3) throw std::overflow_error("BigInt::to_i64: " + str());
    for (size_t i = limbs_.size(); i-- > 0;) {
      if (v > (std::numeric_limits<long long>::max() - limbs_[i]) / base)
        throw std::overflow_error("BigInt::to_i64: " + str());
      v = v * base + limbs_[i];
    }
    return sign() < 0 ? -v : v;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000;
  int sign_ = 1;
  std::vector<std::uint32_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
      std::uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r.push_back(static_cast<std::uint32_t>(cur % kBase));
      carry = cur / kBase;
    }
    return r;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? b[i] : 0);
      borrow = cur < 0 ? 1 : 0;
      if (cur < 0) cur += kBase;
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace qkchev
