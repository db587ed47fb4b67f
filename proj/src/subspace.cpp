#include "pilab/subspace.hpp"

#include <algorithm>

namespace pilab {

namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Scalar inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

}  // namespace

Subspace Subspace::zero(AlgebraPtr ambient) { return Subspace(std::move(ambient)); }

Subspace Subspace::full(AlgebraPtr ambient) {
    Subspace s(ambient);
    const FieldPtr& F = ambient->field();
    for (std::size_t i = 0; i < ambient->dim(); ++i) {
        std::vector<Scalar> row(ambient->dim(), F->zero());
        row[i] = F->one();
        s.rows_.push_back(std::move(row));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(AlgebraPtr ambient, const std::vector<std::vector<Scalar>>& vectors) {
    Subspace s(std::move(ambient));
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : vectors) {
        if (v.size() != s.ambient_->dim()) throw Error("span: vector length mismatch");
        rows.push_back(v);
    }
    s.pivots_ = rref(rows);
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::span_elements(const AlgebraPtr& ambient, const std::vector<Element>& vectors) {
    std::vector<std::vector<Scalar>> coords;
    for (const auto& e : vectors) {
        if (e.model() != ambient) throw MismatchError("span over mixed ambient algebras");
        coords.push_back(e.coords());
    }
    return span(ambient, coords);
}

Element Subspace::basis_element(std::size_t i) const { return ambient_->element(rows_.at(i)); }

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    auto r = reduce(v);
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Element& v) const {
    if (v.model() != ambient_) throw MismatchError("membership test across ambients");
    return contains(v.coords());
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw MismatchError("containment test across ambients");
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw MismatchError("sum across ambients");
    std::vector<std::vector<Scalar>> rows = rows_;
    rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
    return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw MismatchError("intersection across ambients");
    // v in U cap V iff v = sum x_i u_i with reduce_V(v) = 0; solve for x
    const std::size_t ru = rows_.size();
    if (ru == 0 || o.rows_.empty()) return zero(ambient_);
    // coefficients x (length ru) with o.reduce(sum x_i row_i) = 0
    const FieldPtr& F = ambient_->field();
    const std::size_t d = ambient_->dim();
    std::vector<std::vector<Scalar>> constraint;  // rows indexed by ambient coordinate
    std::vector<std::vector<Scalar>> reduced;     // o.reduce of each basis row of U
    for (const auto& row : rows_) reduced.push_back(o.reduce(row));
    for (std::size_t coord = 0; coord < d; ++coord) {
        std::vector<Scalar> c(ru, F->zero());
        bool nonzero = false;
        for (std::size_t i = 0; i < ru; ++i) {
            c[i] = reduced[i][coord];
            nonzero = nonzero || !c[i].is_zero();
        }
        if (nonzero) constraint.push_back(std::move(c));
    }
    // nullspace of the constraint matrix over x
    std::vector<std::size_t> piv = rref(constraint);
    std::vector<bool> is_pivot(ru, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t free = 0; free < ru; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> x(ru, F->zero());
        x[free] = F->one();
        for (std::size_t r = 0; r < constraint.size(); ++r) x[piv[r]] = -constraint[r][free];
        std::vector<Scalar> v(d, F->zero());
        for (std::size_t i = 0; i < ru; ++i)
            for (std::size_t j = 0; j < d; ++j) v[j] += x[i] * rows_[i][j];
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw MismatchError("comparison across ambients");
    return rows_ == o.rows_;
}

std::string Subspace::to_string() const {
    if (rows_.empty()) return "{0}";
    std::string out;
    for (const auto& row : rows_) {
        if (!out.empty()) out += "; ";
        out += ambient_->element(row).to_string();
    }
    return out;
}

Subspace kernel_of_map(const AlgebraPtr& domain, const std::vector<Element>& images) {
    if (images.size() != domain->dim()) throw Error("kernel: need one image per domain basis vector");
    const AlgebraPtr codomain = images.empty() ? domain : images[0].model();
    for (const auto& im : images)
        if (im.model() != codomain) throw MismatchError("kernel: images in mixed codomains");
    ConstraintAccum acc(domain);
    const FieldPtr& F = domain->field();
    for (std::size_t coord = 0; coord < codomain->dim(); ++coord) {
        std::vector<Scalar> row(domain->dim(), F->zero());
        for (std::size_t i = 0; i < domain->dim(); ++i) row[i] = images[i].coord(coord);
        acc.add(std::move(row));
    }
    return acc.solution_space();
}

ConstraintAccum::ConstraintAccum(AlgebraPtr ambient) : ambient_(std::move(ambient)) {}

bool ConstraintAccum::add(std::vector<Scalar> row) {
    if (row.size() != ambient_->dim()) throw Error("constraint row length mismatch");
    // reduce against existing RREF rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = row[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * rows_[r][j];
    }
    std::size_t lead = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == row.size()) return false;
    Scalar inv = row[lead].inverse();
    for (auto& x : row) x = x * inv;
    // eliminate the new pivot from earlier rows and insert in pivot order
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < row.size(); ++j) rows_[r][j] -= f * row[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

bool ConstraintAccum::saturated() const { return rows_.size() == ambient_->dim(); }

Subspace ConstraintAccum::row_space() const { return Subspace::span(ambient_, rows_); }

Subspace ConstraintAccum::solution_space() const {
    const FieldPtr& F = ambient_->field();
    const std::size_t d = ambient_->dim();
    std::vector<bool> is_pivot(d, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(d, F->zero());
        v[free] = F->one();
        for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
        gens.push_back(std::move(v));
    }
    return Subspace::span(ambient_, gens);
}

Subspace subalgebra_closure(const Subspace& S) {
    Subspace V = S;
    for (;;) {
        std::vector<std::vector<Scalar>> products;
        for (const auto& a : V.rows())
            for (const auto& b : V.rows()) products.push_back(V.ambient()->multiply(a, b));
        Subspace next = V + Subspace::span(V.ambient(), products);
        if (next == V) return V;
        V = next;
    }
}

Subspace ideal_closure(const Subspace& S) {
    const AlgebraPtr& A = S.ambient();
    Subspace V = S;
    for (;;) {
        std::vector<std::vector<Scalar>> products;
        for (const auto& v : V.rows())
            for (std::size_t i = 0; i < A->dim(); ++i) {
                std::vector<Scalar> e(A->dim(), A->field()->zero());
                e[i] = A->field()->one();
                products.push_back(A->multiply(e, v));
                products.push_back(A->multiply(v, e));
            }
        Subspace next = V + Subspace::span(A, products);
        if (next == V) return V;
        V = next;
    }
}

Subspace largest_ideal_inside(const Subspace& W) {
    const AlgebraPtr& A = W.ambient();
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    ConstraintAccum acc(A);
    // Constraints are linear maps z -> reduce_W(u z v) with u, v ranging over
    // a basis of A plus the formal unit; u = v = 1 covers membership in W.
    // Each map is applied to the basis of A to produce a matrix whose rows
    // (after reduction by W) are constraint rows on z.
    auto add_map_constraints = [&](const std::vector<std::vector<Scalar>>& images) {
        // images[j] = reduce_W(L(e_j))
        for (std::size_t coord = 0; coord < d; ++coord) {
            std::vector<Scalar> row(d, F->zero());
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = images[j][coord];
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) acc.add(std::move(row));
            if (acc.saturated()) return;
        }
    };

    const std::size_t hull = d + 1;  // index d plays the formal unit
    auto hull_mult = [&](std::size_t u, const std::vector<Scalar>& z) {
        if (u == d) return z;
        std::vector<Scalar> e(d, F->zero());
        e[u] = F->one();
        return A->multiply(e, z);
    };
    auto hull_mult_right = [&](const std::vector<Scalar>& z, std::size_t v) {
        if (v == d) return z;
        std::vector<Scalar> e(d, F->zero());
        e[v] = F->one();
        return A->multiply(z, e);
    };
    for (std::size_t u = 0; u < hull && !acc.saturated(); ++u)
        for (std::size_t v = 0; v < hull && !acc.saturated(); ++v) {
            std::vector<std::vector<Scalar>> images(d);
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Scalar> e(d, F->zero());
                e[j] = F->one();
                images[j] = W.reduce(hull_mult_right(hull_mult(u, e), v));
            }
            add_map_constraints(images);
        }
    return acc.solution_space();
}

Subspace subalgebra_core(const Subspace& W) {
    const AlgebraPtr& A = W.ambient();
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    Subspace V = W;
    for (;;) {
        ConstraintAccum acc(A);
        // z in V
        std::vector<std::vector<Scalar>> residuals(d);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Scalar> e(d, F->zero());
            e[j] = F->one();
            residuals[j] = V.reduce(e);
        }
        for (std::size_t coord = 0; coord < d; ++coord) {
            std::vector<Scalar> row(d, F->zero());
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = residuals[j][coord];
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) acc.add(std::move(row));
        }
        // z * w_k in V and w_k * z in V for each basis row w_k of V
        for (const auto& w : V.rows()) {
            std::vector<std::vector<Scalar>> left(d), right(d);
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Scalar> e(d, F->zero());
                e[j] = F->one();
                left[j] = V.reduce(A->multiply(e, w));
                right[j] = V.reduce(A->multiply(w, e));
            }
            for (std::size_t coord = 0; coord < d; ++coord) {
                std::vector<Scalar> row(d, F->zero()), row2(d, F->zero());
                bool nz1 = false, nz2 = false;
                for (std::size_t j = 0; j < d; ++j) {
                    row[j] = left[j][coord];
                    row2[j] = right[j][coord];
                    nz1 = nz1 || !row[j].is_zero();
                    nz2 = nz2 || !row2[j].is_zero();
                }
                if (nz1) acc.add(std::move(row));
                if (nz2) acc.add(std::move(row2));
            }
        }
        Subspace next = acc.solution_space();
        if (next == V) return V;
        V = next;
    }
}

Subspace bracket_with_ambient(const Subspace& S) {
    const AlgebraPtr& A = S.ambient();
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t i = 0; i < A->dim(); ++i) {
        std::vector<Scalar> e(A->dim(), A->field()->zero());
        e[i] = A->field()->one();
        for (const auto& s : S.rows()) {
            auto as = A->multiply(e, s);
            auto sa = A->multiply(s, e);
            for (std::size_t j = 0; j < as.size(); ++j) as[j] -= sa[j];
            gens.push_back(as);
        }
    }
    return Subspace::span(A, gens);
}

bool is_lie_ideal(const Subspace& S) { return S.contains(bracket_with_ambient(S)); }

bool is_subalgebra(const Subspace& S) {
    for (const auto& a : S.rows())
        for (const auto& b : S.rows())
            if (!S.contains(S.ambient()->multiply(a, b))) return false;
    return true;
}

bool is_ideal(const Subspace& S) {
    const AlgebraPtr& A = S.ambient();
    for (std::size_t i = 0; i < A->dim(); ++i) {
        std::vector<Scalar> e(A->dim(), A->field()->zero());
        e[i] = A->field()->one();
        for (const auto& s : S.rows())
            if (!S.contains(A->multiply(e, s)) || !S.contains(A->multiply(s, e))) return false;
    }
    return true;
}

Subspace coordinate_subspace(const AlgebraPtr& ambient, const std::vector<std::size_t>& indices) {
    std::vector<std::vector<Scalar>> gens;
    for (auto i : indices) {
        std::vector<Scalar> e(ambient->dim(), ambient->field()->zero());
        e.at(i) = ambient->field()->one();
        gens.push_back(std::move(e));
    }
    return Subspace::span(ambient, gens);
}

Subspace commutator_subspace(const AlgebraPtr& A) {
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t i = 0; i < A->dim(); ++i)
        for (std::size_t j = 0; j < A->dim(); ++j) {
            auto v = bracket(A->basis_element(i), A->basis_element(j));
            gens.push_back(v.coords());
        }
    return Subspace::span(A, gens);
}

Subspace centre(const AlgebraPtr& A) {
    // kernel of z -> ([z, e_1], ..., [z, e_d]) stacked
    ConstraintAccum acc(A);
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    for (std::size_t i = 0; i < d && !acc.saturated(); ++i) {
        Element ei = A->basis_element(i);
        std::vector<std::vector<Scalar>> images(d);
        for (std::size_t j = 0; j < d; ++j)
            images[j] = bracket(A->basis_element(j), ei).coords();
        for (std::size_t coord = 0; coord < d; ++coord) {
            std::vector<Scalar> row(d, F->zero());
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = images[j][coord];
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) acc.add(std::move(row));
        }
    }
    return acc.solution_space();
}

Subspace annihilator_of(const Subspace& W) {
    const AlgebraPtr& A = W.ambient();
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    ConstraintAccum acc(A);
    for (const auto& w : W.rows()) {
        std::vector<std::vector<Scalar>> left(d), right(d);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Scalar> e(d, F->zero());
            e[j] = F->one();
            left[j] = A->multiply(e, w);
            right[j] = A->multiply(w, e);
        }
        for (std::size_t coord = 0; coord < d; ++coord) {
            std::vector<Scalar> row(d, F->zero()), row2(d, F->zero());
            bool nz1 = false, nz2 = false;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = left[j][coord];
                row2[j] = right[j][coord];
                nz1 = nz1 || !row[j].is_zero();
                nz2 = nz2 || !row2[j].is_zero();
            }
            if (nz1) acc.add(std::move(row));
            if (nz2) acc.add(std::move(row2));
        }
    }
    return acc.solution_space();
}

// --- constructions that quotient by a subspace ---

QuotientResult quotient(const AlgebraPtr& A, const Subspace& I) {
    if (I.ambient() != A) throw MismatchError("quotient: subspace of a different algebra");
    // certify I is a two-sided ideal, with a witness product
    for (std::size_t i = 0; i < A->dim(); ++i) {
        Element e = A->basis_element(i);
        for (std::size_t r = 0; r < I.dim(); ++r) {
            Element s = I.basis_element(r);
            if (!I.contains(e * s))
                throw Error("not an ideal: " + e.to_string() + " * (" + s.to_string() +
                            ") falls outside");
            if (!I.contains(s * e))
                throw Error("not an ideal: (" + s.to_string() + ") * " + e.to_string() +
                            " falls outside");
        }
    }
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    std::vector<bool> is_pivot(d, false);
    for (auto p : I.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> kept;  // non-pivot coordinates form the complement basis
    for (std::size_t j = 0; j < d; ++j)
        if (!is_pivot[j]) kept.push_back(j);
    const std::size_t nd = kept.size();

    // projection: coset representative of e_j has coordinates reduce(e_j) restricted to kept
    std::vector<std::vector<Scalar>> projection(nd, std::vector<Scalar>(d, F->zero()));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> e(d, F->zero());
        e[j] = F->one();
        auto res = I.reduce(e);
        for (std::size_t r = 0; r < nd; ++r) projection[r][j] = res[kept[r]];
    }

    std::vector<std::string> labels;
    for (auto j : kept) labels.push_back(A->labels()[j]);
    std::vector<std::vector<SparseVec>> rows(nd, std::vector<SparseVec>(nd));
    for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t b = 0; b < nd; ++b) {
            auto prod = I.reduce(A->multiply(A->basis_element(kept[a]).coords(),
                                             A->basis_element(kept[b]).coords()));
            SparseVec entry;
            for (std::size_t r = 0; r < nd; ++r)
                if (!prod[kept[r]].is_zero()) entry.emplace_back(static_cast<std::uint32_t>(r), prod[kept[r]]);
            rows[a][b] = std::move(entry);
        }
    std::optional<std::vector<Scalar>> unit;
    if (A->is_unital()) {
        auto res = I.reduce(A->unit_coords());
        std::vector<Scalar> u;
        for (auto j : kept) u.push_back(res[j]);
        bool zero = true;
        for (const auto& c : u)
            if (!c.is_zero()) zero = false;
        if (!zero && nd > 0) unit = std::move(u);
    }
    QuotientResult out;
    out.algebra = AlgebraModel::make(F, std::move(labels), std::move(rows), std::move(unit),
                                     A->name() + "/I");
    out.projection = std::move(projection);
    return out;
}

Element QuotientResult::project(const Element& a) const {
    const FieldPtr& F = algebra->field();
    std::vector<Scalar> v(algebra->dim(), F->zero());
    for (std::size_t r = 0; r < projection.size(); ++r)
        for (std::size_t j = 0; j < projection[r].size(); ++j) v[r] += projection[r][j] * a.coord(j);
    return algebra->element(std::move(v));
}

AlgebraPtr glued_sum(const AlgebraPtr& E, unsigned copies, const Element& top) {
    if (copies < 1) throw Error("glued sum needs >= 1 copy");
    if (top.model() != E) throw MismatchError("top element not in the summand algebra");
    if (top.is_zero()) throw Error("top element must be nonzero");
    for (std::size_t i = 0; i < E->dim(); ++i) {
        Element e = E->basis_element(i);
        if (!(top * e).is_zero() || !(e * top).is_zero())
            throw Error("top element does not annihilate the algebra: witness " + e.to_string());
    }
    if (copies == 1) return E;

    // m-fold direct sum with labels c<i>:<label>
    const std::size_t de = E->dim();
    const std::size_t d = de * copies;
    const FieldPtr& F = E->field();
    std::vector<std::string> labels;
    for (unsigned c = 1; c <= copies; ++c)
        for (const auto& l : E->labels()) labels.push_back("c" + std::to_string(c) + ":" + l);
    std::vector<std::vector<SparseVec>> rows(d, std::vector<SparseVec>(d));
    for (unsigned c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < de; ++i)
            for (std::size_t j = 0; j < de; ++j) {
                SparseVec entry;
                for (const auto& [k, s] : E->basis_product(i, j))
                    entry.emplace_back(static_cast<std::uint32_t>(k + c * de), s);
                rows[c * de + i][c * de + j] = std::move(entry);
            }
    AlgebraPtr sum = AlgebraModel::make(F, std::move(labels), std::move(rows), std::nullopt,
                                        "sum^" + std::to_string(copies) + "(" + E->name() + ")");

    std::vector<std::vector<Scalar>> diffs;
    for (unsigned c = 1; c < copies; ++c) {
        std::vector<Scalar> v(d, F->zero());
        for (std::size_t i = 0; i < de; ++i) {
            v[i] -= top.coord(i);
            v[c * de + i] += top.coord(i);
        }
        diffs.push_back(std::move(v));
    }
    auto q = quotient(sum, Subspace::span(sum, diffs));
    // keep the construction name for reports
    return AlgebraModel::make(q.algebra->field(), q.algebra->labels(),
                              [&] {
                                  std::vector<std::vector<SparseVec>> t(q.algebra->dim(),
                                                                        std::vector<SparseVec>(q.algebra->dim()));
                                  for (std::size_t i = 0; i < q.algebra->dim(); ++i)
                                      for (std::size_t j = 0; j < q.algebra->dim(); ++j)
                                          t[i][j] = q.algebra->basis_product(i, j);
                                  return t;
                              }(),
                              std::nullopt,
                              "glued(" + E->name() + ",m=" + std::to_string(copies) + ")");
}

}  // namespace pilab
