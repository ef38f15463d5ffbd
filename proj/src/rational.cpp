#include "polyexp/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace polyexp {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // strict grammar: [-]digits[/digits]
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw Error("malformed rational literal: '" + std::string(text) + "'");
    std::size_t pos = num_end;
    if (pos < text.size() && text[pos] == '/') {
        std::size_t den_end = digits(pos + 1);
        if (den_end == pos + 1)
            throw Error("malformed rational literal: '" + std::string(text) + "'");
        pos = den_end;
    }
    if (pos != text.size())
        throw Error("malformed rational literal: '" + std::string(text) + "'");

    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw Error("malformed rational literal: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw Error("rational with zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inv() const {
    if (is_zero())
        throw Error("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw Error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

double Rational::to_double() const {
    // mpq_get_d truncates toward zero; one correction step lands on the
    // nearest double for every value that fits the range.
    double d0 = v_.get_d();
    if (!std::isfinite(d0))
        throw Error("rational exceeds double range");
    mpq_class rem = v_ - mpq_class(d0);
    return d0 + rem.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace polyexp
