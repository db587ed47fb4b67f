#include "pilab/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pilab {

namespace {

std::vector<Scalar> zero_vec(const FieldPtr& F, std::size_t d) {
    return std::vector<Scalar>(d, F->zero());
}

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::string coords_to_string(const std::vector<Scalar>& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = v[i].to_string();
        if (c == "1")
            out += labels[i];
        else
            out += c + "*" + labels[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

const std::vector<Scalar>& AlgebraModel::unit_coords() const {
    if (!unit_) throw Error("algebra '" + name_ + "' has no unit");
    return *unit_;
}

std::vector<Scalar> AlgebraModel::multiply(const std::vector<Scalar>& a,
                                           const std::vector<Scalar>& b) const {
    std::vector<Scalar> out = zero_vec(field_, dim_);
    std::size_t nzb[64];
    std::vector<std::size_t> nzb_big;
    std::size_t nb = 0;
    const bool small = dim_ <= 64;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!b[j].is_zero()) {
            if (small)
                nzb[nb++] = j;
            else
                nzb_big.push_back(j);
        }
    const std::size_t* bj = small ? nzb : nzb_big.data();
    if (!small) nb = nzb_big.size();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t t = 0; t < nb; ++t) {
            const std::size_t j = bj[t];
            Scalar ab = a[i] * b[j];
            for (const auto& [k, c] : basis_product(i, j)) out[k] += ab * c;
        }
    }
    return out;
}

Element AlgebraModel::element(std::vector<Scalar> coords) const {
    return Element(shared_from_this(), std::move(coords));
}
Element AlgebraModel::zero_element() const { return element(zero_vec(field_, dim_)); }
Element AlgebraModel::basis_element(std::size_t i) const {
    auto v = zero_vec(field_, dim_);
    v.at(i) = field_->one();
    return element(std::move(v));
}
Element AlgebraModel::unit_element() const { return element(unit_coords()); }

std::size_t AlgebraModel::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw Error("no basis label '" + label + "' in algebra '" + name_ + "'");
}

mpz_class AlgebraModel::element_count() const {
    mpz_class q = field_->cardinality(), n;
    mpz_pow_ui(n.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(dim_));
    return n;
}

AlgebraPtr AlgebraModel::make(FieldPtr field, std::vector<std::string> labels,
                              std::vector<std::vector<SparseVec>> rows,
                              std::optional<std::vector<Scalar>> unit, std::string name,
                              std::map<std::string, std::vector<std::size_t>> marked,
                              std::size_t dim_cap) {
    auto model = std::shared_ptr<AlgebraModel>(new AlgebraModel());
    const std::size_t d = labels.size();
    if (d > dim_cap)
        throw CapError("algebra dimension " + std::to_string(d) + " exceeds cap " +
                       std::to_string(dim_cap));
    if (rows.size() != d) throw Error("structure constant table has wrong shape");
    model->field_ = std::move(field);
    model->dim_ = d;
    model->labels_ = std::move(labels);
    model->name_ = std::move(name);
    model->marked_ = std::move(marked);
    model->table_.assign(d * d, SparseVec{});
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw Error("structure constant table has wrong shape");
        for (std::size_t j = 0; j < d; ++j) {
            SparseVec entry;
            for (auto& [k, c] : rows[i][j]) {
                if (k >= d) throw Error("structure constant target index out of range");
                if (!c.field()->same(*model->field_))
                    throw MismatchError("structure constant not over the algebra field");
                if (!c.is_zero()) entry.emplace_back(k, c);
            }
            std::sort(entry.begin(), entry.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            model->table_[i * d + j] = std::move(entry);
        }
    }

    // associativity certificate: (e_i e_j) e_k == e_i (e_j e_k) for all triples
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Scalar> lhs = zero_vec(model->field_, d), rhs = zero_vec(model->field_, d);
                for (const auto& [l, c] : model->basis_product(i, j))
                    for (const auto& [m, c2] : model->basis_product(l, k)) lhs[m] += c * c2;
                for (const auto& [l, c] : model->basis_product(j, k))
                    for (const auto& [m, c2] : model->basis_product(i, l)) rhs[m] += c * c2;
                if (lhs != rhs)
                    throw Error("associativity fails in '" + model->name_ + "' at triple (" +
                                model->labels_[i] + ", " + model->labels_[j] + ", " +
                                model->labels_[k] + "): (ab)c = " +
                                coords_to_string(lhs, model->labels_) + " but a(bc) = " +
                                coords_to_string(rhs, model->labels_));
            }

    if (unit) {
        if (unit->size() != d) throw Error("unit vector has wrong length");
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> e = zero_vec(model->field_, d);
            e[i] = model->field_->one();
            if (model->multiply(*unit, e) != e || model->multiply(e, *unit) != e)
                throw Error("declared unit fails the unit law at basis element " +
                            model->labels_[i]);
        }
        model->unit_ = std::move(unit);
    }
    return model;
}

Element::Element(AlgebraPtr model, std::vector<Scalar> coords)
    : model_(std::move(model)), coords_(std::move(coords)) {
    if (coords_.size() != model_->dim()) throw Error("element coordinate length mismatch");
    for (const auto& c : coords_)
        if (!c.field()->same(*model_->field()))
            throw MismatchError("element coordinate not over the algebra field");
}

bool Element::is_zero() const { return vec_is_zero(coords_); }

static void require_same_model(const Element& a, const Element& b) {
    if (a.model() != b.model())
        throw MismatchError("elements of different algebras: " + a.model()->name() + " vs " +
                            b.model()->name());
}

Element Element::operator+(const Element& o) const {
    require_same_model(*this, o);
    auto v = coords_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
    return Element(model_, std::move(v));
}
Element Element::operator-(const Element& o) const {
    require_same_model(*this, o);
    auto v = coords_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.coords_[i];
    return Element(model_, std::move(v));
}
Element Element::operator*(const Element& o) const {
    require_same_model(*this, o);
    return Element(model_, model_->multiply(coords_, o.coords_));
}
Element Element::operator-() const {
    auto v = coords_;
    for (auto& c : v) c = -c;
    return Element(model_, std::move(v));
}
Element Element::scaled(const Scalar& c) const {
    auto v = coords_;
    for (auto& x : v) x = x * c;
    return Element(model_, std::move(v));
}
bool Element::operator==(const Element& o) const {
    require_same_model(*this, o);
    return coords_ == o.coords_;
}
bool Element::less(const Element& o) const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == o.coords_[i]) continue;
        return coords_[i].less(o.coords_[i]);
    }
    return false;
}
std::string Element::to_string() const { return coords_to_string(coords_, model_->labels()); }

// --- constructors ---

AlgebraPtr algebra_from_table(const FieldPtr& field, std::vector<std::string> labels,
                              const std::vector<TableEntry>& entries,
                              std::optional<std::vector<Scalar>> unit, std::string name) {
    const std::size_t d = labels.size();
    std::vector<std::vector<SparseVec>> rows(d, std::vector<SparseVec>(d));
    for (const auto& e : entries) {
        if (e.i >= d || e.j >= d || e.k >= d) throw Error("table entry index out of range");
        rows[e.i][e.j].emplace_back(static_cast<std::uint32_t>(e.k), e.c);
    }
    return AlgebraModel::make(field, std::move(labels), std::move(rows), std::move(unit),
                              std::move(name));
}

AlgebraPtr matrix_algebra(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error("matrix algebra needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(n) * n;
    auto idx = [n](unsigned r, unsigned c) { return static_cast<std::size_t>(r) * n + c; };
    std::vector<std::string> labels(d);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
            labels[idx(r, c)] = "e" + std::to_string(r + 1) + std::to_string(c + 1);
    std::vector<std::vector<SparseVec>> rows(d, std::vector<SparseVec>(d));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
            for (unsigned r2 = 0; r2 < n; ++r2)
                for (unsigned c2 = 0; c2 < n; ++c2)
                    if (c == r2)
                        rows[idx(r, c)][idx(r2, c2)].emplace_back(
                            static_cast<std::uint32_t>(idx(r, c2)), field->one());
    std::vector<Scalar> unit(d, field->zero());
    for (unsigned r = 0; r < n; ++r) unit[idx(r, r)] = field->one();
    return AlgebraModel::make(field, std::move(labels), std::move(rows), std::move(unit),
                              "matrix:" + std::to_string(n));
}

namespace {

// increasing index subsets in graded lexicographic order
std::vector<std::vector<unsigned>> graded_subsets(unsigned n, bool include_empty) {
    std::vector<std::vector<unsigned>> out;
    if (include_empty) out.push_back({});
    for (unsigned size = 1; size <= n; ++size) {
        std::vector<unsigned> s(size);
        for (unsigned i = 0; i < size; ++i) s[i] = i + 1;
        for (;;) {
            out.push_back(s);
            // next combination
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && s[i] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++s[i];
            for (unsigned j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
        }
    }
    return out;
}

unsigned inversion_count(const std::vector<unsigned>& s, const std::vector<unsigned>& t) {
    unsigned inv = 0;
    for (unsigned a : s)
        for (unsigned b : t)
            if (a > b) ++inv;
    return inv;
}

bool disjoint(const std::vector<unsigned>& s, const std::vector<unsigned>& t) {
    for (unsigned a : s)
        for (unsigned b : t)
            if (a == b) return false;
    return true;
}

std::vector<unsigned> merge_sorted(const std::vector<unsigned>& s, const std::vector<unsigned>& t) {
    std::vector<unsigned> u;
    u.reserve(s.size() + t.size());
    std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
    return u;
}

AlgebraPtr monomial_algebra(const FieldPtr& field, unsigned n, bool unital, const Scalar& reorder,
                            const std::string& gen, const std::string& name) {
    auto subsets = graded_subsets(n, unital);
    const std::size_t d = subsets.size();
    std::vector<std::string> labels(d);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) {
        index[subsets[i]] = i;
        if (subsets[i].empty()) {
            labels[i] = "1";
        } else {
            for (unsigned g : subsets[i]) labels[i] += gen + std::to_string(g);
        }
    }
    std::vector<std::vector<SparseVec>> rows(d, std::vector<SparseVec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (!disjoint(subsets[i], subsets[j])) continue;
            Scalar c = reorder.pow(mpz_class(inversion_count(subsets[i], subsets[j])));
            rows[i][j].emplace_back(static_cast<std::uint32_t>(index.at(merge_sorted(subsets[i], subsets[j]))), c);
        }
    std::optional<std::vector<Scalar>> unit;
    if (unital) {
        std::vector<Scalar> u(d, field->zero());
        u[index.at({})] = field->one();
        unit = std::move(u);
    }
    std::map<std::string, std::vector<std::size_t>> marked;
    for (std::size_t i = 0; i < d; ++i)
        marked[subsets[i].size() % 2 == 0 ? "even" : "odd"].push_back(i);
    return AlgebraModel::make(field, std::move(labels), std::move(rows), std::move(unit), name,
                              std::move(marked));
}

}  // namespace

AlgebraPtr grassmann(const FieldPtr& field, unsigned n, bool unital) {
    if (field->characteristic() == 2) throw Error("Grassmann algebra requires characteristic != 2");
    if (n < 1) throw Error("Grassmann algebra needs n >= 1");
    return monomial_algebra(field, n, unital, -field->one(), "e",
                            "grassmann:" + std::to_string(n) + (unital ? "" : ":nonunital"));
}

AlgebraPtr grassmann_like(const FieldPtr& field, const Scalar& alpha, unsigned generators) {
    if (alpha.is_zero()) throw Error("grassmann_like requires alpha != 0");
    if (!alpha.field()->same(*field)) throw MismatchError("alpha not in the base field");
    if (generators < 1) throw Error("grassmann_like needs >= 1 generator");
    return monomial_algebra(field, generators, false, alpha, "v",
                            "glike(" + alpha.to_string() + "," + std::to_string(generators) + ")");
}

AlgebraPtr group_algebra(const FieldPtr& field, const std::vector<std::vector<std::size_t>>& cayley,
                         std::vector<std::string> element_names, std::string name) {
    const std::size_t n = cayley.size();
    if (n == 0) throw Error("empty Cayley table");
    for (const auto& row : cayley) {
        if (row.size() != n) throw Error("Cayley table is not square");
        for (auto v : row)
            if (v >= n) throw Error("Cayley table entry out of range");
    }
    if (element_names.empty())
        for (std::size_t i = 0; i < n; ++i) element_names.push_back("g" + std::to_string(i));

    // group axioms, with witnesses
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (cayley[e][i] != i || cayley[i][e] != i) {
                ok = false;
                break;
            }
        if (ok) {
            id = e;
            break;
        }
    }
    if (!id) throw Error("Cayley table is not a group: no identity element");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
                    throw Error("Cayley table is not a group: associativity fails at (" +
                                element_names[i] + ", " + element_names[j] + ", " +
                                element_names[k] + ")");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n; ++j)
            if (cayley[i][j] == *id && cayley[j][i] == *id) {
                has_inverse = true;
                break;
            }
        if (!has_inverse)
            throw Error("Cayley table is not a group: no inverse for " + element_names[i]);
    }

    std::vector<std::vector<SparseVec>> rows(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j].emplace_back(static_cast<std::uint32_t>(cayley[i][j]), field->one());
    std::vector<Scalar> unit(n, field->zero());
    unit[*id] = field->one();
    return AlgebraModel::make(field, std::move(element_names), std::move(rows), std::move(unit),
                              std::move(name));
}

std::vector<std::vector<std::size_t>> elementary_abelian(unsigned p, unsigned k,
                                                         std::vector<std::string>* names) {
    if (p < 2 || k < 1) throw Error("elementary abelian group needs p >= 2, k >= 1");
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        n *= p;
        if (n > 4096) throw CapError("group too large");
    }
    auto digits = [&](std::size_t v) {
        std::vector<unsigned> d(k);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        return d;
    };
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto da = digits(a), db = digits(b);
            std::size_t v = 0, mult = 1;
            for (unsigned i = 0; i < k; ++i) {
                v += ((da[i] + db[i]) % p) * mult;
                mult *= p;
            }
            table[a][b] = v;
        }
    if (names) {
        names->clear();
        for (std::size_t a = 0; a < n; ++a) {
            std::string s = "g";
            for (unsigned d : digits(a)) s += std::to_string(d);
            names->push_back(s);
        }
    }
    return table;
}

std::vector<std::vector<std::size_t>> cyclic_group(unsigned n, std::vector<std::string>* names) {
    if (n < 1) throw Error("cyclic group needs n >= 1");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    if (names) {
        names->clear();
        for (std::size_t a = 0; a < n; ++a) names->push_back("g" + std::to_string(a));
    }
    return table;
}

AlgebraPtr truncated_poly(const FieldPtr& field, unsigned N, bool unital) {
    if (N < 2) throw Error("truncated polynomial algebra needs N >= 2");
    const unsigned lo = unital ? 0 : 1;
    const std::size_t d = N - lo;
    std::vector<std::string> labels;
    for (unsigned e = lo; e < N; ++e)
        labels.push_back(e == 0 ? "1" : (e == 1 ? "t" : "t" + std::to_string(e)));
    std::vector<std::vector<SparseVec>> rows(d, std::vector<SparseVec>(d));
    for (unsigned a = lo; a < N; ++a)
        for (unsigned b = lo; b < N; ++b)
            if (a + b < N) rows[a - lo][b - lo].emplace_back(a + b - lo, field->one());
    std::optional<std::vector<Scalar>> unit;
    if (unital) {
        std::vector<Scalar> u(d, field->zero());
        u[0] = field->one();
        unit = std::move(u);
    }
    return AlgebraModel::make(field, std::move(labels), std::move(rows), std::move(unit),
                              "truncpoly:" + std::to_string(N) + (unital ? "" : ":nonunital"));
}

AlgebraPtr unital_hull(const AlgebraPtr& A) {
    const std::size_t d = A->dim();
    std::vector<std::string> labels{"1"};
    labels.insert(labels.end(), A->labels().begin(), A->labels().end());
    std::vector<std::vector<SparseVec>> rows(d + 1, std::vector<SparseVec>(d + 1));
    const FieldPtr& F = A->field();
    for (std::size_t i = 0; i <= d; ++i) {
        rows[0][i].emplace_back(static_cast<std::uint32_t>(i), F->one());
        if (i > 0) rows[i][0].emplace_back(static_cast<std::uint32_t>(i), F->one());
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : A->basis_product(i, j)) rows[i + 1][j + 1].emplace_back(k + 1, c);
    std::vector<Scalar> unit(d + 1, F->zero());
    unit[0] = F->one();
    return AlgebraModel::make(F, std::move(labels), std::move(rows), std::move(unit),
                              "hull(" + A->name() + ")");
}

AlgebraPtr direct_sum(const AlgebraPtr& A, const AlgebraPtr& B) {
    if (!A->field()->same(*B->field())) throw MismatchError("direct sum over different fields");
    const std::size_t da = A->dim(), db = B->dim();
    std::vector<std::string> labels;
    for (const auto& l : A->labels()) labels.push_back("a:" + l);
    for (const auto& l : B->labels()) labels.push_back("b:" + l);
    std::vector<std::vector<SparseVec>> rows(da + db, std::vector<SparseVec>(da + db));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) rows[i][j] = A->basis_product(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            SparseVec entry;
            for (const auto& [k, c] : B->basis_product(i, j)) entry.emplace_back(k + da, c);
            rows[da + i][da + j] = std::move(entry);
        }
    return AlgebraModel::make(A->field(), std::move(labels), std::move(rows), std::nullopt,
                              "sum(" + A->name() + "," + B->name() + ")");
}

Element evaluate(const FreePoly& f, const std::vector<Element>& args) {
    if (args.empty()) throw Error("evaluate needs at least one argument to fix the algebra");
    const AlgebraPtr& A = args[0].model();
    if (!f.field()->same(*A->field()))
        throw MismatchError("polynomial field differs from algebra field");
    for (const auto& a : args)
        if (a.model() != A) throw MismatchError("evaluation arguments in different algebras");
    for (auto i : f.support_indices())
        if (i > args.size())
            throw Error("arity mismatch: polynomial uses x" + std::to_string(i) + " but only " +
                        std::to_string(args.size()) + " arguments given");
    std::vector<Scalar> acc(A->dim(), A->field()->zero());
    for (const auto& [w, c] : f.terms()) {
        std::vector<Scalar> prod;
        if (w.empty()) {
            if (!A->is_unital())
                throw Error("unit monomial cannot be evaluated in the non-unital algebra '" +
                            A->name() + "'");
            prod = A->unit_coords();
        } else {
            prod = args[w[0] - 1].coords();
            for (std::size_t t = 1; t < w.size(); ++t) prod = A->multiply(prod, args[w[t] - 1].coords());
        }
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * prod[i];
    }
    return A->element(std::move(acc));
}

// --- spec strings and files ---

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

unsigned parse_count(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw Error("expected a number in algebra spec");
    unsigned long v = std::stoul(t);
    if (v > 100000) throw Error("number too large in algebra spec");
    return static_cast<unsigned>(v);
}

}  // namespace

AlgebraPtr make_algebra(const FieldPtr& field, const std::string& spec, const std::string& base_dir) {
    std::string s = trim(spec);
    if (s.rfind("glued(", 0) == 0 && s.back() == ')') {
        auto parts = split_top_level(s.substr(6, s.size() - 7), ',');
        if (parts.size() != 3) throw Error("glued(alpha,g,m) needs three arguments");
        Scalar alpha = field->parse_scalar(trim(parts[0]));
        unsigned g = parse_count(parts[1]);
        unsigned m = parse_count(parts[2]);
        AlgebraPtr E = grassmann_like(field, alpha, g);
        Element top = E->basis_element(E->dim() - 1);  // the full monomial v1...vg
        return glued_sum(E, m, top);
    }
    auto parts = split_top_level(s, ':');
    const std::string& head = parts[0];
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= parts.size()) throw Error("algebra spec '" + s + "' is missing an argument");
        return parts[i];
    };
    if (head == "matrix") return matrix_algebra(field, parse_count(arg(1)));
    if (head == "grassmann") {
        bool unital = !(parts.size() > 2 && trim(parts[2]) == "nonunital");
        return grassmann(field, parse_count(arg(1)), unital);
    }
    if (head == "truncpoly") {
        bool unital = !(parts.size() > 2 && trim(parts[2]) == "nonunital");
        return truncated_poly(field, parse_count(arg(1)), unital);
    }
    if (head == "group") {
        std::string g = trim(arg(1));
        std::vector<std::string> names;
        if (g.rfind("eab(", 0) == 0 && g.back() == ')') {
            auto ps = split_top_level(g.substr(4, g.size() - 5), ',');
            if (ps.size() != 2) throw Error("eab(p,k) needs two arguments");
            auto table = elementary_abelian(parse_count(ps[0]), parse_count(ps[1]), &names);
            return group_algebra(field, table, names, "group:" + g);
        }
        if (g.rfind("cyclic(", 0) == 0 && g.back() == ')') {
            auto table = cyclic_group(parse_count(g.substr(7, g.size() - 8)), &names);
            return group_algebra(field, table, names, "group:" + g);
        }
        throw Error("unknown group spec '" + g + "'");
    }
    if (head == "file") {
        std::string path = trim(arg(1));
        if (!base_dir.empty() && path.front() != '/') path = base_dir + "/" + path;
        AlgebraPtr A = read_algebra_file(path);
        if (!A->field()->same(*field))
            throw MismatchError("algebra file field " + A->field()->name() +
                                " differs from requested field " + field->name());
        return A;
    }
    throw Error("unknown algebra spec '" + s + "'");
}

AlgebraPtr read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file '" + path + "'");
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::optional<std::vector<Scalar>> unit;
    std::vector<TableEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ss(t);
        std::string head;
        ss >> head;
        auto fail = [&](const std::string& msg) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (head == "field") {
            std::string lit;
            ss >> lit;
            field = Field::parse(lit);
        } else if (head == "dim") {
            ss >> dim;
        } else if (head == "labels") {
            std::string l;
            while (ss >> l) labels.push_back(l);
        } else if (head == "unit") {
            if (!field || dim == 0) fail("unit line before field/dim");
            std::vector<Scalar> u;
            std::string c;
            while (ss >> c) u.push_back(field->parse_scalar(c));
            if (u.size() != dim) fail("unit vector needs dim coordinates");
            unit = std::move(u);
        } else {
            if (!field || dim == 0) fail("structure constants before field/dim");
            // i j k c with 1-based indices
            std::size_t i = 0, j = 0, k = 0;
            std::string c;
            std::istringstream ss2(t);
            if (!(ss2 >> i >> j >> k >> c)) fail("expected 'i j k c'");
            if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
                fail("structure constant index out of range");
            entries.push_back(TableEntry{i - 1, j - 1, k - 1, field->parse_scalar(c)});
        }
    }
    if (!field) throw Error(path + ": missing 'field' header");
    if (dim == 0) throw Error(path + ": missing 'dim' header");
    if (labels.empty())
        for (std::size_t i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != dim) throw Error(path + ": label count differs from dim");
    return algebra_from_table(field, labels, entries, std::move(unit), path);
}

}  // namespace pilab
