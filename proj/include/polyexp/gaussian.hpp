#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "polyexp/rational.hpp"

namespace polyexp {

/// Gaussian rational a + b*i with exact rational components. This is the
/// scalar field every module computes over; all operations are exact.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2

    GaussianRational inv() const;
    GaussianRational pow(unsigned long e) const;

    /// Nearest complex<double>; throws Error on overflow of either part.
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Total order used for canonical term sorting: lexicographic by (re, im).
    static int cmp(const GaussianRational& a, const GaussianRational& b) {
        if (int c = Rational::cmp(a.re_, b.re_); c != 0)
            return c;
        return Rational::cmp(a.im_, b.im_);
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace polyexp
