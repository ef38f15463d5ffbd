#pragma once

#include <optional>
#include <vector>

#include "polyexp/matrix.hpp"
#include "polyexp/polyexp.hpp"

namespace polyexp {

/// A single monomial-exponential coordinate: the degree-j atom of lambda.
struct Atom {
    GaussianRational lambda;
    int degree = 0;

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.lambda == b.lambda && a.degree == b.degree;
    }
};

/// Finite-dimensional span of polynomial-exponential expressions with an
/// exact coordinate frame: the atoms covering every basis element, plus the
/// coordinates of the basis in that frame. Immutable once built.
class Subspace {
  public:
    /// Span of the generators; dependent generators are filtered out by
    /// exact rank. Shift-base generators must not contain exponent-zero atoms.
    static Subspace span_of(const std::vector<PolyExp>& generators, OperatorBase base);

    /// Smallest subspace containing the generators that is closed under the
    /// base operator: images are adjoined while the exact rank grows. The
    /// iteration terminates because every atom maps into atoms of the same
    /// exponent and lower-or-equal degree.
    static Subspace closure_of(const std::vector<PolyExp>& generators, OperatorBase base);

    OperatorBase base() const { return base_; }
    const std::vector<PolyExp>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Atom>& frame() const { return frame_; }

    /// Coordinates of the basis in the frame, one column per basis element.
    Matrix coordinate_matrix() const;

    /// Coordinates of f over the frame atoms; nullopt when f involves an
    /// atom outside the frame (and hence lies outside the space).
    std::optional<Column> frame_coordinates(const PolyExp& f) const;

    /// Membership test with coordinates in the stored basis.
    std::optional<Column> coordinates_in_basis(const PolyExp& f) const;
    bool contains(const PolyExp& f) const { return coordinates_in_basis(f).has_value(); }

  private:
    explicit Subspace(OperatorBase base) : base_(base) {}

    void build_frame(const std::vector<PolyExp>& generators);
    bool try_adjoin(const PolyExp& f);

    OperatorBase base_;
    std::vector<Atom> frame_;
    std::vector<PolyExp> basis_;
    std::vector<Column> columns_;  // frame coordinates of basis_
};

/// True iff the base operator maps every basis element back into the span.
/// Invariance under the base operator is enough: every linear operator in
/// this setting is a polynomial in it.
bool is_invariant(const Subspace& v);

/// Matrix of the base operator restricted to v, in v's basis. Requires an
/// invariant space.
Matrix operator_matrix(const Subspace& v);

/// Factored minimal polynomial of the base operator restricted to v, read
/// directly off the atoms: the roots are the exponents present, each with
/// multiplicity 1 + the maximal attached polynomial degree. Verified by
/// exact annihilation, including minimality of every exponent. Requires an
/// invariant, nonzero space.
std::vector<OperatorFactor> structural_minimal_polynomial(const Subspace& v);

/// Spectral projector polynomials pi_i = r_i * p_i mod p for the factored
/// polynomial p = prod (x - root_i)^mult_i, where p_i = p / (x - root_i)^mult_i
/// and the r_i come from the Bezout identity sum r_i p_i = 1. The returned
/// polynomials satisfy sum pi_i = 1 exactly and deg pi_i < deg p.
std::vector<Poly> bezout_projectors(const std::vector<OperatorFactor>& factors);

/// Component of v in ker (Op - root_i)^mult_i: the image pi_i(Op)(v).
/// Throws when v lies outside the space.
PolyExp project_component(const PolyExp& v, const Subspace& space, int component_index);

struct DecompositionComponent {
    GaussianRational lambda;
    int multiplicity = 0;
    std::vector<PolyExp> basis;
};

struct Decomposition {
    std::vector<DecompositionComponent> components;  // sorted by lambda
    /// True when every component is the FULL m-dimensional kernel of
    /// (Op - lambda)^m — which invariance forces.
    bool is_full = false;
};

/// Primary decomposition of an invariant space: project the basis through
/// the Bezout projectors, rank-filter each component, and verify directness
/// and fullness exactly.
Decomposition decompose(const Subspace& v);

/// Outcome of the invariance analysis of a span of generators.
struct InvarianceReport {
    bool invariant = false;
    int span_dim = 0;
    int closure_dim = 0;
    /// Decomposition of the span itself when invariant, of its closure otherwise.
    Decomposition decomposition;
    /// When not invariant: a basis element whose image leaves the span, and
    /// that escaping image.
    std::optional<PolyExp> witness_source;
    std::optional<PolyExp> witness;
};

InvarianceReport analyze_invariance(const std::vector<PolyExp>& generators, OperatorBase base);

/// Kernel bases of (M - root_i I)^mult_i for a caller-supplied factored
/// annihilating polynomial; validates the annihilation and the directness
/// of the resulting decomposition.
std::vector<std::pair<GaussianRational, std::vector<Column>>>
primary_decomposition(const Matrix& m, const std::vector<OperatorFactor>& factors);

}  // namespace polyexp
