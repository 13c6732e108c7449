#ifndef FWDIDX_RATIONAL_HPP
#define FWDIDX_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace fwdidx {

// Exact non-negative rational, used for the average-demand lower bounds.
// Denominators stay small (graph order or size), so int64 is plenty.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::int64_t ceil() const { return num_ >= 0 ? (num_ + den_ - 1) / den_ : -((-num_) / den_); }
    std::int64_t floor() const { return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_); }
    bool isInteger() const { return den_ == 1; }
    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace fwdidx

#endif
