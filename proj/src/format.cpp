#include "polyexp/format.hpp"

#include <sstream>

namespace polyexp {

std::string format_scalar(const GaussianRational& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::string format_poly(const Poly& p, std::string_view var) {
    return p.str(var);
}

namespace {

bool is_nonnegative_integer(const GaussianRational& z) {
    return z.im().is_zero() && z.re().is_integer() && !z.re().is_negative();
}

// single nonzero coefficient of degree >= 1
bool is_pure_monomial(const Poly& p) {
    if (p.degree() < 1)
        return false;
    for (int j = 0; j < p.degree(); ++j)
        if (!p.coeff(j).is_zero())
            return false;
    return true;
}

// "c*" prefix for a constant coefficient in front of an exponential factor
std::string constant_prefix(const GaussianRational& c) {
    if (c.is_one())
        return "";
    if (c == GaussianRational(-1))
        return "-";
    if (!c.re().is_zero() && !c.im().is_zero())
        return "(" + format_scalar(c) + ")*";
    return format_scalar(c) + "*";
}

std::string exponential_text(const GaussianRational& lambda, OperatorBase base) {
    if (base == OperatorBase::Shift) {
        if (is_nonnegative_integer(lambda))
            return format_scalar(lambda) + "^n";
        return "(" + format_scalar(lambda) + ")^n";
    }
    std::string arg;
    if (lambda.is_one())
        arg = "t";
    else if (lambda == GaussianRational(-1))
        arg = "-t";
    else if (!lambda.re().is_zero() && !lambda.im().is_zero())
        arg = "(" + format_scalar(lambda) + ")*t";
    else
        arg = format_scalar(lambda) + "*t";
    return "exp(" + arg + ")";
}

std::string term_text(const GaussianRational& lambda, const Poly& p, OperatorBase base) {
    const GaussianRational plain_lambda =
        base == OperatorBase::Shift ? GaussianRational(1) : GaussianRational(0);
    std::string_view var = base_variable(base);
    if (lambda == plain_lambda)
        return format_poly(p, var);

    std::string exp_part = exponential_text(lambda, base);
    if (p.is_one())
        return exp_part;
    if (p.is_constant())
        return constant_prefix(p.constant_term()) + exp_part;
    if (is_pure_monomial(p))
        return format_poly(p, var) + "*" + exp_part;
    return "(" + format_poly(p, var) + ")*" + exp_part;
}

}  // namespace

std::string format_polyexp(const PolyExp& f, OperatorBase base) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [lambda, p] : f.terms()) {
        std::string text = term_text(lambda, p, base);
        if (out.empty())
            out = text;
        else if (text[0] == '-')
            out += " - " + text.substr(1);
        else
            out += " + " + text;
    }
    return out;
}

std::string format_general_solution(const GeneralSolution& gs) {
    std::string out;
    if (!gs.particular.is_zero() || gs.homogeneous.empty())
        out = format_polyexp(gs.particular, gs.base);
    for (std::size_t j = 0; j < gs.homogeneous.size(); ++j) {
        std::string piece = "c" + std::to_string(j + 1) + "*" +
                            format_polyexp(gs.homogeneous[j], gs.base);
        out += out.empty() ? piece : " + " + piece;
    }
    return out;
}

}  // namespace polyexp
