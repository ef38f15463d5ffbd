#include "polyexp/gaussian.hpp"

#include <ostream>

namespace polyexp {

GaussianRational GaussianRational::inv() const {
    if (is_zero())
        throw Error("division by zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned long e) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

// "i", "-i", or "c*i" for a nonzero imaginary part given without its sign.
std::string imaginary_part(const Rational& im_abs) {
    if (im_abs.is_one())
        return "i";
    return im_abs.str() + "*i";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    if (z.im().is_zero())
        return os << z.re();
    if (z.re().is_zero())
        return os << (z.im().is_negative() ? "-" : "") << imaginary_part(z.im().abs());
    return os << z.re() << (z.im().is_negative() ? "-" : "+") << imaginary_part(z.im().abs());
}

}  // namespace polyexp
