#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hamming/errors.hpp"

namespace hamming {

// Exact rational on 64-bit words. All arithmetic in this library that feeds
// an equality assertion goes through this type; doubles appear only in
// Monte Carlo statistics and curve evaluation.
class Rat {
  public:
    constexpr Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                   checked(i128(a.den_) * b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                   checked(i128(a.den_) * b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw invalid_input("rational division by zero");
        return Rat(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }
    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // floor(num/den) with the usual sign convention.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return double(num_) / double(den_); }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p/q", an integer, or a plain decimal ("0.25" becomes 1/4).
    static Rat parse(const std::string& s);

  private:
    using i128 = __int128;

    static long long checked(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return (long long)v;
    }

    void normalize() {
        if (den_ == 0) throw invalid_input("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace hamming
