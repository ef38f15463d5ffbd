#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "polyexp/format.hpp"
#include "polyexp/json_io.hpp"
#include "polyexp/parse.hpp"
#include "polyexp/solver.hpp"
#include "polyexp/subspace.hpp"

namespace {

using namespace polyexp;

OperatorBase domain_base(const std::string& domain) {
    if (domain == "seq" || domain == "shift")
        return OperatorBase::Shift;
    if (domain == "ode" || domain == "derivative")
        return OperatorBase::Derivative;
    throw Error("unknown domain '" + domain + "' (use seq or ode)");
}

// Inputs come from positional arguments, or from stdin when none are given.
std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
    if (!args.empty())
        return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos)
            lines.push_back(line);
    }
    if (lines.empty())
        throw Error("no input given (pass expressions as arguments or on stdin)");
    return lines;
}

std::string joined(const std::vector<PolyExp>& fs, OperatorBase base) {
    std::string out;
    for (const PolyExp& f : fs) {
        if (!out.empty())
            out += ", ";
        out += format_polyexp(f, base);
    }
    return out;
}

void print_components(const Decomposition& d, OperatorBase base) {
    for (const DecompositionComponent& c : d.components)
        std::cout << "component lambda=" << format_scalar(c.lambda)
                  << " multiplicity=" << c.multiplicity << ": " << joined(c.basis, base) << "\n";
}

int run_solve(OperatorBase base, const std::string& equation, const std::string& roots,
              const std::string& initial, bool json_format) {
    ParsedEquation eq = parse_equation(equation, base);
    OperatorSpec op = eq.op;
    if (!roots.empty()) {
        op = op.with_factors(parse_roots(roots));
    } else if (op.degree() == 1) {
        // a linear operator factors trivially: a1*x + a0 = a1 * (x - (-a0/a1))
        GaussianRational root = -(op.expanded().coeff(0) / op.expanded().coeff(1));
        op = op.with_factors({{std::move(root), 1}});
    }

    if (!op.factors()) {
        // no factorization available: the particular solution is still
        // reachable when no rhs exponent resonates
        if (!initial.empty())
            throw Error("initial-value problems require the factored operator (roots=...)");
        PolyExp y = particular_solution(op, eq.rhs);
        if (!verify_residual(op, y, eq.rhs))
            throw Error("solution failed the residual check");
        if (json_format) {
            nlohmann::json out{{"particular", polyexp_to_json(y, base)},
                               {"residual_verified", true}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "particular: " << format_polyexp(y, base) << "\n";
            std::cout << "homogeneous: unavailable without roots (pass --roots)\n";
            std::cout << "residual_verified: true\n";
        }
        return 0;
    }

    if (!initial.empty()) {
        std::vector<GaussianRational> data = parse_scalar_list(initial);
        PolyExp y = solve_ivp(op, eq.rhs, data);
        bool ok = verify_residual(op, y, eq.rhs);
        if (!ok)
            throw Error("solution failed the residual check");
        if (json_format) {
            nlohmann::json out{{"solution", polyexp_to_json(y, base)}, {"residual_verified", ok}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "solution: " << format_polyexp(y, base) << "\n";
            std::cout << "residual_verified: true\n";
        }
        return 0;
    }

    GeneralSolution gs = general_solution(op, eq.rhs);
    bool ok = verify_residual(op, gs.particular, eq.rhs);
    if (!ok)
        throw Error("solution failed the residual check");
    if (json_format) {
        std::cout << solution_to_json(gs, ok).dump() << "\n";
    } else {
        std::cout << "particular: " << format_polyexp(gs.particular, base) << "\n";
        std::cout << "homogeneous: " << joined(gs.homogeneous, base) << "\n";
        std::cout << "general: " << format_general_solution(gs) << "\n";
        std::cout << "residual_verified: true\n";
    }
    return 0;
}

int run_decompose(OperatorBase base, const std::vector<std::string>& inputs, bool json_format) {
    std::vector<PolyExp> gens;
    for (const std::string& s : gather_inputs(inputs))
        gens.push_back(parse_expression(s, base));
    InvarianceReport report = analyze_invariance(gens, base);
    if (!report.invariant)
        throw Error("the span is not invariant (witness: " +
                    format_polyexp(*report.witness, base) + "); use closure or check-invariant");
    if (json_format) {
        std::cout << decomposition_to_json(report, base).dump() << "\n";
    } else {
        std::cout << "invariant: true\n";
        std::cout << "dimension: " << report.span_dim << "\n";
        print_components(report.decomposition, base);
    }
    return 0;
}

int run_closure(OperatorBase base, const std::vector<std::string>& inputs, bool json_format) {
    std::vector<PolyExp> gens;
    for (const std::string& s : gather_inputs(inputs))
        gens.push_back(parse_expression(s, base));
    Subspace closure = Subspace::closure_of(gens, base);
    InvarianceReport report = analyze_invariance(closure.basis(), base);
    if (json_format) {
        nlohmann::json out = decomposition_to_json(report, base);
        out["dimension"] = closure.dim();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "dimension: " << closure.dim() << "\n";
        std::cout << "basis: " << joined(closure.basis(), base) << "\n";
        print_components(report.decomposition, base);
    }
    return 0;
}

int run_check_invariant(OperatorBase base, const std::vector<std::string>& inputs,
                        bool json_format) {
    std::vector<PolyExp> gens;
    for (const std::string& s : gather_inputs(inputs))
        gens.push_back(parse_expression(s, base));
    InvarianceReport report = analyze_invariance(gens, base);
    if (json_format) {
        std::cout << decomposition_to_json(report, base).dump() << "\n";
        return 0;
    }
    if (report.invariant) {
        std::cout << "invariant: true\n";
        std::cout << "dimension: " << report.span_dim << "\n";
        print_components(report.decomposition, base);
    } else {
        std::cout << "invariant: false\n";
        std::cout << "witness_source: " << format_polyexp(*report.witness_source, base) << "\n";
        std::cout << "witness: " << format_polyexp(*report.witness, base) << "\n";
        std::cout << "closure dimension: " << report.closure_dim << "\n";
        print_components(report.decomposition, base);
    }
    return 0;
}

int run_kernel(OperatorBase base, const std::string& lambda_text, int m, bool json_format) {
    GaussianRational lambda = parse_scalar(lambda_text);
    std::vector<PolyExp> basis = kernel_basis(lambda, m, base);
    if (json_format) {
        nlohmann::json arr = nlohmann::json::array();
        for (const PolyExp& f : basis)
            arr.push_back(polyexp_to_json(f, base));
        std::cout << nlohmann::json{{"basis", std::move(arr)}}.dump() << "\n";
    } else {
        for (const PolyExp& f : basis)
            std::cout << format_polyexp(f, base) << "\n";
    }
    return 0;
}

int run_verify(OperatorBase base, const std::string& equation, const std::string& candidate,
               const std::string& roots, bool json_format) {
    ParsedEquation eq = parse_equation(equation, base);
    OperatorSpec op = eq.op;
    if (!roots.empty())
        op = op.with_factors(parse_roots(roots));
    PolyExp y = parse_expression(candidate, base);
    bool ok = verify_residual(op, y, eq.rhs);
    if (json_format)
        std::cout << nlohmann::json{{"residual_zero", ok}}.dump() << "\n";
    else
        std::cout << "residual_zero: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and structure tool for linear recurrences and ODEs\n"
                 "with polynomial-exponential right-hand sides"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string domain;
    std::string equation, roots, initial, lambda_text, candidate;
    std::vector<std::string> inputs;
    int m = 1;

    CLI::App* solve = app.add_subcommand("solve", "solve an equation exactly");
    solve->add_option("--domain", domain, "seq or ode")->required();
    solve->add_option("equation", equation, "e.g. \"y[n+2]-5*y[n+1]+6*y[n] = 2^n\"");
    solve->add_option("--roots", roots, "factored operator, e.g. \"2^1,3^1\"");
    solve->add_option("--initial", initial, "initial data, e.g. \"1,2\"");

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "decompose an invariant span");
    decompose_cmd->add_option("--domain", domain, "seq or ode")->required();
    decompose_cmd->add_option("exprs", inputs, "generator expressions");

    CLI::App* closure_cmd = app.add_subcommand("closure", "smallest invariant superspace");
    closure_cmd->add_option("--domain", domain, "seq or ode")->required();
    closure_cmd->add_option("exprs", inputs, "generator expressions");

    CLI::App* check_cmd = app.add_subcommand("check-invariant", "test invariance of a span");
    check_cmd->add_option("--domain", domain, "seq or ode")->required();
    check_cmd->add_option("exprs", inputs, "generator expressions");

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "basis of ker (Op - lambda)^m");
    kernel_cmd->add_option("--domain", domain, "seq or ode")->required();
    kernel_cmd->add_option("--lambda", lambda_text, "exponent scalar")->required();
    kernel_cmd->add_option("--m", m, "kernel power (>= 1)")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a candidate solution");
    verify_cmd->add_option("--domain", domain, "seq or ode")->required();
    verify_cmd->add_option("equation", equation, "the equation");
    verify_cmd->add_option("--candidate", candidate, "candidate solution")->required();
    verify_cmd->add_option("--roots", roots, "factored operator (optional)");

    add_format(solve);
    add_format(decompose_cmd);
    add_format(closure_cmd);
    add_format(check_cmd);
    add_format(kernel_cmd);
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);

        OperatorBase base = domain_base(domain);
        bool json_format = format == "json";

        if (solve->parsed()) {
            if (equation.empty())
                equation = gather_inputs({}).at(0);
            return run_solve(base, equation, roots, initial, json_format);
        }
        if (decompose_cmd->parsed())
            return run_decompose(base, inputs, json_format);
        if (closure_cmd->parsed())
            return run_closure(base, inputs, json_format);
        if (check_cmd->parsed())
            return run_check_invariant(base, inputs, json_format);
        if (kernel_cmd->parsed())
            return run_kernel(base, lambda_text, m, json_format);
        if (verify_cmd->parsed()) {
            if (equation.empty())
                equation = gather_inputs({}).at(0);
            return run_verify(base, equation, candidate, roots, json_format);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const polyexp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const polyexp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
