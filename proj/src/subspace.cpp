#include "polyexp/subspace.hpp"

#include <algorithm>

namespace polyexp {

namespace {

int atom_cmp(const Atom& a, const Atom& b) {
    if (int c = GaussianRational::cmp(a.lambda, b.lambda); c != 0)
        return c;
    return a.degree - b.degree;
}

void reject_shift_zero(const PolyExp& f, OperatorBase base) {
    if (base != OperatorBase::Shift)
        return;
    for (const auto& [lambda, p] : f.terms())
        if (lambda.is_zero())
            throw Error("shift subspaces cannot contain exponent-zero atoms");
}

}  // namespace

void Subspace::build_frame(const std::vector<PolyExp>& generators) {
    for (const PolyExp& g : generators) {
        reject_shift_zero(g, base_);
        for (const auto& [lambda, p] : g.terms())
            for (int j = 0; j <= p.degree(); ++j) {
                Atom a{lambda, j};
                auto pos = std::lower_bound(frame_.begin(), frame_.end(), a,
                                            [](const Atom& x, const Atom& y) { return atom_cmp(x, y) < 0; });
                if (pos == frame_.end() || !(*pos == a))
                    frame_.insert(pos, a);
            }
    }
}

std::optional<Column> Subspace::frame_coordinates(const PolyExp& f) const {
    Column c(frame_.size());
    for (const auto& [lambda, p] : f.terms())
        for (int j = 0; j <= p.degree(); ++j) {
            if (p.coeff(j).is_zero())
                continue;
            Atom a{lambda, j};
            auto pos = std::lower_bound(frame_.begin(), frame_.end(), a,
                                        [](const Atom& x, const Atom& y) { return atom_cmp(x, y) < 0; });
            if (pos == frame_.end() || !(*pos == a))
                return std::nullopt;
            c[pos - frame_.begin()] = p.coeff(j);
        }
    return c;
}

bool Subspace::try_adjoin(const PolyExp& f) {
    if (f.is_zero())
        return false;
    auto coords = frame_coordinates(f);
    if (!coords)
        throw Error("element leaves the coordinate frame");
    if (span_coordinates(*coords, columns_))
        return false;
    basis_.push_back(f);
    columns_.push_back(std::move(*coords));
    return true;
}

Subspace Subspace::span_of(const std::vector<PolyExp>& generators, OperatorBase base) {
    Subspace v(base);
    v.build_frame(generators);
    for (const PolyExp& g : generators)
        v.try_adjoin(g);
    return v;
}

Subspace Subspace::closure_of(const std::vector<PolyExp>& generators, OperatorBase base) {
    Subspace v = span_of(generators, base);
    // images stay inside the frame, so only the rank can grow
    for (std::size_t i = 0; i < v.basis_.size(); ++i)
        v.try_adjoin(apply_base(base, v.basis_[i]));
    return v;
}

Matrix Subspace::coordinate_matrix() const {
    if (columns_.empty())
        return Matrix(static_cast<int>(frame_.size()), 0);
    return Matrix::from_columns(columns_);
}

std::optional<Column> Subspace::coordinates_in_basis(const PolyExp& f) const {
    auto coords = frame_coordinates(f);
    if (!coords)
        return std::nullopt;
    return span_coordinates(*coords, columns_);
}

bool is_invariant(const Subspace& v) {
    for (const PolyExp& f : v.basis())
        if (!v.contains(apply_base(v.base(), f)))
            return false;
    return true;
}

Matrix operator_matrix(const Subspace& v) {
    Matrix m(v.dim(), v.dim());
    for (int j = 0; j < v.dim(); ++j) {
        auto coords = v.coordinates_in_basis(apply_base(v.base(), v.basis()[j]));
        if (!coords)
            throw Error("operator matrix requires an invariant subspace");
        for (int i = 0; i < v.dim(); ++i)
            m.at(i, j) = (*coords)[i];
    }
    return m;
}

namespace {

OperatorSpec factored_operator(OperatorBase base, const std::vector<OperatorFactor>& factors) {
    if (factors.empty())
        return OperatorSpec::from_expanded(base, Poly{GaussianRational(1)});
    return OperatorSpec::from_factors(base, factors, GaussianRational(1));
}

}  // namespace

std::vector<OperatorFactor> structural_minimal_polynomial(const Subspace& v) {
    if (v.dim() == 0)
        throw Error("minimal polynomial of the zero subspace");
    if (!is_invariant(v))
        throw Error("minimal polynomial requires an invariant subspace");

    std::vector<OperatorFactor> factors;
    for (const Atom& a : v.frame()) {
        if (!factors.empty() && factors.back().root == a.lambda)
            factors.back().multiplicity = std::max(factors.back().multiplicity, a.degree + 1);
        else
            factors.push_back({a.lambda, a.degree + 1});
    }

    // The full product must annihilate the basis and every exponent must be
    // minimal; both checks are exact.
    OperatorSpec full = factored_operator(v.base(), factors);
    for (const PolyExp& f : v.basis())
        if (!apply_operator(full, f).is_zero())
            throw Error("structural minimal polynomial fails to annihilate");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<OperatorFactor> reduced = factors;
        if (--reduced[i].multiplicity == 0)
            reduced.erase(reduced.begin() + i);
        OperatorSpec dec = factored_operator(v.base(), reduced);
        bool some_survives = false;
        for (const PolyExp& f : v.basis())
            if (!apply_operator(dec, f).is_zero()) {
                some_survives = true;
                break;
            }
        if (!some_survives)
            throw Error("structural minimal polynomial exponent is not minimal");
    }
    return factors;
}

std::vector<Poly> bezout_projectors(const std::vector<OperatorFactor>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].multiplicity < 1)
            throw Error("projector factor with multiplicity < 1");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].root == factors[j].root)
                throw Error("projector factors with duplicate root");
    }
    std::vector<std::pair<GaussianRational, int>> pairs;
    for (const OperatorFactor& f : factors)
        pairs.push_back({f.root, f.multiplicity});
    Poly p = Poly::from_factored(pairs, GaussianRational(1));

    std::vector<Poly> complements;
    complements.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<std::pair<GaussianRational, int>> others;
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i)
                others.push_back(pairs[j]);
        complements.push_back(Poly::from_factored(others, GaussianRational(1)));
    }

    BezoutCertificate cert = bezout(complements);
    std::vector<Poly> projectors;
    projectors.reserve(factors.size());
    Poly sum;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        projectors.push_back((cert.cofactors[i] * complements[i]) % p);
        sum += projectors.back();
    }
    if (!sum.is_one())
        throw Error("projector decomposition of unity fails");
    return projectors;
}

PolyExp project_component(const PolyExp& v, const Subspace& space, int component_index) {
    std::vector<OperatorFactor> factors = structural_minimal_polynomial(space);
    if (component_index < 0 || component_index >= static_cast<int>(factors.size()))
        throw Error("component index out of range");
    if (!space.contains(v))
        throw Error("element is not a member of the subspace");
    std::vector<Poly> projectors = bezout_projectors(factors);
    PolyExp image = apply_operator(OperatorSpec::from_expanded(space.base(), projectors[component_index]), v);
    OperatorSpec annihilator = OperatorSpec::from_factors(
        space.base(), {factors[component_index]}, GaussianRational(1));
    if (!apply_operator(annihilator, image).is_zero())
        throw Error("projected component escapes its kernel");
    return image;
}

Decomposition decompose(const Subspace& v) {
    if (v.dim() == 0)
        return Decomposition{{}, true};
    std::vector<OperatorFactor> factors = structural_minimal_polynomial(v);
    std::vector<Poly> projectors = bezout_projectors(factors);

    Decomposition out;
    out.is_full = true;
    std::vector<Column> stacked;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        OperatorSpec projector = OperatorSpec::from_expanded(v.base(), projectors[i]);
        DecompositionComponent comp{factors[i].root, factors[i].multiplicity, {}};
        std::vector<Column> comp_columns;
        for (const PolyExp& f : v.basis()) {
            PolyExp image = apply_operator(projector, f);
            if (image.is_zero())
                continue;
            auto coords = v.frame_coordinates(image);
            if (!coords)
                throw Error("projected component leaves the coordinate frame");
            if (span_coordinates(*coords, comp_columns))
                continue;
            comp_columns.push_back(*coords);
            stacked.push_back(std::move(*coords));
            comp.basis.push_back(std::move(image));
        }
        for (const PolyExp& k : kernel_basis(factors[i].root, factors[i].multiplicity, v.base()))
            if (!v.contains(k))
                out.is_full = false;
        out.components.push_back(std::move(comp));
    }

    int total = 0;
    for (const DecompositionComponent& c : out.components)
        total += static_cast<int>(c.basis.size());
    if (total != v.dim())
        throw Error("component dimensions do not sum to the space dimension");
    if (static_cast<int>(stacked.size()) != v.dim() ||
        rank(Matrix::from_columns(stacked)) != v.dim())
        throw Error("component sum is not direct");
    return out;
}

InvarianceReport analyze_invariance(const std::vector<PolyExp>& generators, OperatorBase base) {
    Subspace v = Subspace::span_of(generators, base);
    InvarianceReport report;
    report.span_dim = v.dim();

    for (const PolyExp& f : v.basis()) {
        PolyExp image = apply_base(base, f);
        if (!v.contains(image)) {
            report.witness_source = f;
            report.witness = image;
            break;
        }
    }

    if (!report.witness) {
        report.invariant = true;
        report.closure_dim = v.dim();
        report.decomposition = decompose(v);
    } else {
        report.invariant = false;
        Subspace closure = Subspace::closure_of(generators, base);
        report.closure_dim = closure.dim();
        report.decomposition = decompose(closure);
    }
    return report;
}

std::vector<std::pair<GaussianRational, std::vector<Column>>>
primary_decomposition(const Matrix& m, const std::vector<OperatorFactor>& factors) {
    if (m.rows() != m.cols())
        throw Error("primary decomposition of a non-square matrix");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].root == factors[j].root)
                throw Error("primary decomposition with duplicate root");

    Matrix product = Matrix::identity(m.rows());
    std::vector<Matrix> powers;
    for (const OperatorFactor& f : factors) {
        Matrix shifted = m;
        for (int i = 0; i < m.rows(); ++i)
            shifted.at(i, i) -= f.root;
        Matrix pw = shifted.pow(f.multiplicity);
        powers.push_back(pw);
        product = product * pw;
    }
    if (!product.is_zero())
        throw Error("supplied polynomial does not annihilate the matrix");

    std::vector<std::pair<GaussianRational, std::vector<Column>>> out;
    std::vector<Column> stacked;
    int total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<Column> basis = kernel(powers[i]);
        total += static_cast<int>(basis.size());
        stacked.insert(stacked.end(), basis.begin(), basis.end());
        out.push_back({factors[i].root, std::move(basis)});
    }
    if (total != m.rows() || rank(Matrix::from_columns(stacked)) != m.rows())
        throw Error("matrix primary decomposition is not direct");
    return out;
}

}  // namespace polyexp
