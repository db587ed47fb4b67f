#ifndef PILAB_ALGEBRA_HPP
#define PILAB_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pilab/freepoly.hpp"
#include "pilab/scalar.hpp"

namespace pilab {

class AlgebraModel;
using AlgebraPtr = std::shared_ptr<const AlgebraModel>;
class Subspace;
class Element;

/// One structure-constant row: e_i e_j = sum of (k, c) entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// A finite-dimensional associative algebra given by structure constants on a
/// labelled basis. Associativity on every basis triple (and the unit law,
/// when a unit is declared) is certified at construction.
class AlgebraModel : public std::enable_shared_from_this<AlgebraModel> {
public:
    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }
    bool is_unital() const { return unit_.has_value(); }
    const std::vector<Scalar>& unit_coords() const;

    const SparseVec& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    /// Coordinates of (sum a_i e_i)(sum b_j e_j).
    std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

    Element element(std::vector<Scalar> coords) const;
    Element zero_element() const;
    Element basis_element(std::size_t i) const;
    Element unit_element() const;
    std::size_t label_index(const std::string& label) const;  // throws if absent

    /// Named basis-index subsets (e.g. "even"/"odd" grading of Grassmann-like
    /// algebras); used by reports and grading-aware checks.
    const std::map<std::string, std::vector<std::size_t>>& marked_subsets() const { return marked_; }

    /// Total number of elements |A| = |K|^dim (finite fields only).
    mpz_class element_count() const;

    static AlgebraPtr make(FieldPtr field, std::vector<std::string> labels,
                           std::vector<std::vector<SparseVec>> rows,
                           std::optional<std::vector<Scalar>> unit, std::string name,
                           std::map<std::string, std::vector<std::size_t>> marked = {},
                           std::size_t dim_cap = 512);

private:
    AlgebraModel() = default;

    FieldPtr field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;  // dim*dim entries, row-major (i, j)
    std::optional<std::vector<Scalar>> unit_;
    std::string name_;
    std::map<std::string, std::vector<std::size_t>> marked_;
};

/// An element of an AlgebraModel: a coordinate vector over the basis.
class Element {
public:
    Element() = default;
    Element(AlgebraPtr model, std::vector<Scalar> coords);

    const AlgebraPtr& model() const { return model_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool less(const Element& o) const;  // coordinate order, for set containers

    std::string to_string() const;

private:
    AlgebraPtr model_;
    std::vector<Scalar> coords_;
};

inline Element bracket(const Element& a, const Element& b) { return a * b - b * a; }

// --- constructors ---

/// Structure constants as (i, j, k, c) quadruples, 0-based indices.
struct TableEntry {
    std::size_t i, j, k;
    Scalar c;
};
AlgebraPtr algebra_from_table(const FieldPtr& field, std::vector<std::string> labels,
                              const std::vector<TableEntry>& entries,
                              std::optional<std::vector<Scalar>> unit = std::nullopt,
                              std::string name = "table");

/// Full matrix algebra M_n(K); basis e_{rc} row-major, unital.
AlgebraPtr matrix_algebra(const FieldPtr& field, unsigned n);

/// Grassmann algebra on n generators (finite truncation); char(K) != 2.
/// Basis: increasing products of generators (plus 1 when unital).
/// Marks the subsets "even" and "odd" by monomial length parity.
AlgebraPtr grassmann(const FieldPtr& field, unsigned n, bool unital);

/// Non-unital Grassmann-like algebra: v_j v_i = alpha v_i v_j for i < j and
/// v_i^2 = 0; basis all increasing monomials of length >= 1.
AlgebraPtr grassmann_like(const FieldPtr& field, const Scalar& alpha, unsigned generators);

/// Quotient of the m-fold direct sum of E by the identifications
/// top^(i) = top^(1); requires span{top} to be a 1-dimensional ideal
/// annihilating E on both sides.
AlgebraPtr glued_sum(const AlgebraPtr& E, unsigned copies, const Element& top);

/// Group algebra K[G] from a Cayley table: table[i][j] = index of g_i g_j.
AlgebraPtr group_algebra(const FieldPtr& field, const std::vector<std::vector<std::size_t>>& cayley,
                         std::vector<std::string> element_names = {}, std::string name = "group");

/// Cayley table of (Z/p)^k.
std::vector<std::vector<std::size_t>> elementary_abelian(unsigned p, unsigned k,
                                                         std::vector<std::string>* names = nullptr);
/// Cayley table of Z/n.
std::vector<std::vector<std::size_t>> cyclic_group(unsigned n, std::vector<std::string>* names = nullptr);

/// K[t]/(t^N): unital basis 1..t^{N-1}, non-unital basis t..t^{N-1}.
AlgebraPtr truncated_poly(const FieldPtr& field, unsigned N, bool unital);

/// A with a formal unit adjoined at coordinate 0 (always adjoins, even when A
/// already has a unit).
AlgebraPtr unital_hull(const AlgebraPtr& A);

/// Componentwise product, cross terms zero.
AlgebraPtr direct_sum(const AlgebraPtr& A, const AlgebraPtr& B);

struct QuotientResult {
    AlgebraPtr algebra;
    std::vector<std::vector<Scalar>> projection;  // rows = new basis, columns = old
    Element project(const Element& a) const;
};
/// A / I for a two-sided ideal I (checked; a violating product is reported).
QuotientResult quotient(const AlgebraPtr& A, const Subspace& I);

/// Evaluates a free polynomial at args (x_i -> args[i-1]). Non-unital models
/// reject polynomials with a unit-monomial term.
Element evaluate(const FreePoly& f, const std::vector<Element>& args);

/// Parses one algebra spec: `matrix:n`, `grassmann:n[:nonunital]`,
/// `group:eab(p,k)`, `group:cyclic(n)`, `truncpoly:N[:nonunital]`,
/// `glued(alpha,g,m)`, or `file:<path>` for the structure-constant format.
AlgebraPtr make_algebra(const FieldPtr& field, const std::string& spec,
                        const std::string& base_dir = "");

/// Reads the line-oriented structure-constant file format.
AlgebraPtr read_algebra_file(const std::string& path);

}  // namespace pilab

#endif
