#ifndef PILAB_SUBSPACE_HPP
#define PILAB_SUBSPACE_HPP

#include <vector>

#include "pilab/algebra.hpp"

namespace pilab {

/// A subspace of the underlying vector space of an AlgebraModel, stored as a
/// reduced row-echelon basis. The form is canonical: pivots strictly
/// increasing, pivot entries 1, pivot columns otherwise zero, no zero rows.
/// Two subspaces are equal iff their matrices are identical.
class Subspace {
public:
    static Subspace zero(AlgebraPtr ambient);
    static Subspace full(AlgebraPtr ambient);
    static Subspace span(AlgebraPtr ambient, const std::vector<std::vector<Scalar>>& vectors);
    static Subspace span_elements(const AlgebraPtr& ambient, const std::vector<Element>& vectors);

    const AlgebraPtr& ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t codim() const { return ambient_->dim() - rows_.size(); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Element basis_element(std::size_t i) const;

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Element& v) const;
    bool contains(const Subspace& other) const;
    /// v minus its projection onto this subspace along the pivot coordinates;
    /// zero iff v lies in the subspace, and linear in v.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Subspace(AlgebraPtr ambient) : ambient_(std::move(ambient)) {}
    AlgebraPtr ambient_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Kernel of the linear map sending basis vector e_i of the domain to
/// images[i]; all images must live in one codomain model.
Subspace kernel_of_map(const AlgebraPtr& domain, const std::vector<Element>& images);

/// Accumulates linear constraint rows (in RREF) over the coordinates of an
/// ambient model; solution_space() returns their common kernel.
class ConstraintAccum {
public:
    explicit ConstraintAccum(AlgebraPtr ambient);
    /// Adds the constraint row . v = 0; returns true when the row was new
    /// (increased the rank).
    bool add(std::vector<Scalar> row);
    bool saturated() const;  // rank == ambient dim, solution space is 0
    std::size_t rank() const { return rows_.size(); }
    Subspace solution_space() const;
    /// The accumulated rows themselves as a subspace; lets the class double as
    /// an incremental span builder.
    Subspace row_space() const;

private:
    AlgebraPtr ambient_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Least subspace containing S and closed under multiplication; fixpoint of
/// V <- V + span(V V). Terminates because dim strictly increases until stable.
Subspace subalgebra_closure(const Subspace& S);

/// Least two-sided ideal containing S; fixpoint of V <- V + span(A V) + span(V A).
Subspace ideal_closure(const Subspace& S);

/// Largest two-sided ideal of the ambient algebra contained in W, computed as
/// the single linear system {z in W : u z v in W for all u, v over a basis of
/// the unital hull}.
Subspace largest_ideal_inside(const Subspace& W);

/// Fixpoint V_{k+1} = {z in V_k : z V_k + V_k z is contained in V_k} starting
/// from W. The result is a subalgebra contained in W; it need not be the
/// unique maximal one.
Subspace subalgebra_core(const Subspace& W);

/// span{[a, s] : a over the ambient basis, s over S}.
Subspace bracket_with_ambient(const Subspace& S);
/// [A, S] subset of S.
bool is_lie_ideal(const Subspace& S);

/// True when S S is contained in S.
bool is_subalgebra(const Subspace& S);
/// True when A S and S A are contained in S.
bool is_ideal(const Subspace& S);

/// Subspace spanned by the given basis coordinates.
Subspace coordinate_subspace(const AlgebraPtr& ambient, const std::vector<std::size_t>& indices);

/// span{[a, b] : a, b over the ambient basis}.
Subspace commutator_subspace(const AlgebraPtr& A);
/// {z : [z, a] = 0 for all a}: the centre.
Subspace centre(const AlgebraPtr& A);
/// {z : z w = w z = 0 for all w in W}: the two-sided annihilator of W in A.
Subspace annihilator_of(const Subspace& W);

}  // namespace pilab

#endif
