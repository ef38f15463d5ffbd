#include "polyexp/json_io.hpp"

namespace polyexp {

using nlohmann::json;

json scalar_to_json(const GaussianRational& z) {
    return json{{"re", z.re().str()}, {"im", z.im().str()}};
}

GaussianRational scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw Error("scalar JSON must be an object with \"re\" and \"im\"");
    return {Rational::from_string(j.at("re").get<std::string>()),
            Rational::from_string(j.at("im").get<std::string>())};
}

json polyexp_to_json(const PolyExp& f, OperatorBase base) {
    json terms = json::array();
    for (const auto& [lambda, p] : f.terms()) {
        json coeffs = json::array();
        for (const GaussianRational& c : p.coeffs())
            coeffs.push_back(scalar_to_json(c));
        terms.push_back(json{{"lambda", scalar_to_json(lambda)}, {"coeffs", std::move(coeffs)}});
    }
    return json{{"base", base_name(base)}, {"terms", std::move(terms)}};
}

std::pair<PolyExp, OperatorBase> polyexp_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("terms"))
        throw Error("polyexp JSON must be an object with \"base\" and \"terms\"");
    std::string base_str = j.at("base").get<std::string>();
    OperatorBase base;
    if (base_str == "shift")
        base = OperatorBase::Shift;
    else if (base_str == "derivative")
        base = OperatorBase::Derivative;
    else
        throw Error("polyexp JSON base must be \"shift\" or \"derivative\"");

    std::vector<PolyExp::Term> raw;
    for (const json& term : j.at("terms")) {
        GaussianRational lambda = scalar_from_json(term.at("lambda"));
        std::vector<GaussianRational> coeffs;
        for (const json& c : term.at("coeffs"))
            coeffs.push_back(scalar_from_json(c));
        raw.push_back({std::move(lambda), Poly(std::move(coeffs))});
    }
    return {PolyExp::from_terms(std::move(raw)), base};
}

json decomposition_to_json(const InvarianceReport& report, OperatorBase base) {
    json components = json::array();
    for (const DecompositionComponent& c : report.decomposition.components) {
        json basis = json::array();
        for (const PolyExp& f : c.basis)
            basis.push_back(polyexp_to_json(f, base));
        components.push_back(json{{"lambda", scalar_to_json(c.lambda)},
                                  {"multiplicity", c.multiplicity},
                                  {"basis", std::move(basis)}});
    }
    json out{{"invariant", report.invariant}, {"components", std::move(components)}};
    if (report.witness)
        out["witness"] = polyexp_to_json(*report.witness, base);
    return out;
}

json solution_to_json(const GeneralSolution& gs, bool residual_verified) {
    json homogeneous = json::array();
    for (const PolyExp& h : gs.homogeneous)
        homogeneous.push_back(polyexp_to_json(h, gs.base));
    return json{{"particular", polyexp_to_json(gs.particular, gs.base)},
                {"homogeneous", std::move(homogeneous)},
                {"residual_verified", residual_verified}};
}

}  // namespace polyexp
