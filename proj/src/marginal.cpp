#include "pilab/marginal.hpp"

#include <random>
#include <set>

namespace pilab {

std::string method_name(MarginalMethod m) {
    return m == MarginalMethod::Kernel ? "kernel" : "enum";
}

MarginalMethod auto_marginal_method(const FreePoly& f, const AlgebraPtr& A) {
    if (f.is_multilinear()) return MarginalMethod::Kernel;
    if (A->field()->finite()) return MarginalMethod::Enumerate;
    throw Error("marginal computation for a non-multilinear polynomial needs a finite field");
}

namespace {

void require_field_match(const FreePoly& f, const AlgebraPtr& A) {
    if (!f.field()->same(*A->field()))
        throw MismatchError("polynomial over " + f.field()->name() + " against an algebra over " +
                            A->field()->name());
}

mpz_class pow_count(const mpz_class& base, std::size_t exp) {
    mpz_class n;
    mpz_pow_ui(n.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return n;
}

// walks every (slot, basis tuple) pair of a multilinear polynomial and hands
// the visitor the argument vector with the slot position left to fill
template <class Fn>
void for_each_slot_tuple(const FreePoly& f, const AlgebraPtr& A, std::uint64_t cap, Fn&& visit) {
    auto vars = f.support_indices();
    const std::size_t n = vars.size(), d = A->dim();
    if (n == 0 || d == 0) return;
    if (n > 1 && pow_count(d, n - 1) > cap)
        throw CapError("marginal kernel method needs " + pow_count(d, n - 1).get_str() +
                       " tuples per slot, above the cap");
    std::vector<Element> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(A->basis_element(i));
    for (std::size_t slot = 0; slot < n; ++slot) {
        std::vector<std::uint32_t> others;
        for (std::size_t k = 0; k < n; ++k)
            if (k != slot) others.push_back(vars[k]);
        std::vector<Element> args(f.max_index(), A->zero_element());
        std::vector<std::size_t> idx(others.size(), 0);
        for (auto v : others) args[v - 1] = basis[0];
        for (;;) {
            if (!visit(vars[slot], args)) return;
            std::size_t k = 0;
            while (k < others.size() && ++idx[k] == d) idx[k++] = 0;
            if (k == others.size()) break;
            for (std::size_t j = 0; j <= k && j < others.size(); ++j)
                args[others[j] - 1] = basis[idx[j]];
        }
    }
}

Subspace marginal_kernel(const FreePoly& f, const AlgebraPtr& A, std::uint64_t cap) {
    if (!f.is_multilinear()) throw Error("kernel method requires a multilinear polynomial");
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    ConstraintAccum acc(A);
    for_each_slot_tuple(f, A, cap, [&](std::uint32_t slot_var, std::vector<Element>& args) {
        // linear map z -> f(..., z at slot, ...): one matrix column per basis z
        std::vector<std::vector<Scalar>> images(d);
        for (std::size_t j = 0; j < d; ++j) {
            args[slot_var - 1] = A->basis_element(j);
            images[j] = evaluate(f, args).coords();
        }
        for (std::size_t coord = 0; coord < d; ++coord) {
            std::vector<Scalar> row(d, F->zero());
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = images[j][coord];
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) acc.add(std::move(row));
        }
        return !acc.saturated();
    });
    return acc.solution_space();
}

Element nth_element(const AlgebraPtr& A, const std::vector<Scalar>& field_elems, std::uint64_t n) {
    std::vector<Scalar> coords(A->dim(), A->field()->zero());
    const std::uint64_t q = field_elems.size();
    for (std::size_t i = 0; i < A->dim(); ++i) {
        coords[i] = field_elems[n % q];
        n /= q;
    }
    return A->element(std::move(coords));
}

// eradicator test by full enumeration of tuples and scalar multiples
bool eradicates_by_enumeration(const Element& z, const FreePoly& f, std::uint64_t cap) {
    const AlgebraPtr& A = z.model();
    if (!A->field()->finite()) throw Error("enumerate method requires a finite field");
    auto vars = f.support_indices();
    const std::size_t n = vars.size();
    mpz_class evals = pow_count(A->element_count(), n) * static_cast<long>(n) *
                      A->field()->cardinality();
    if (evals > cap)
        throw CapError("eradicator enumeration needs " + evals.get_str() +
                       " evaluations, above the cap of " + std::to_string(cap) +
                       " (raise PILAB_ENUM_CAP to override)");
    std::vector<Scalar> field_elems = A->field()->elements();
    const std::uint64_t total = static_cast<std::uint64_t>(A->element_count().get_ui());
    std::vector<Element> args(f.max_index(), A->zero_element());
    std::vector<std::uint64_t> idx(n, 0);
    for (std::size_t k = 0; k < n; ++k) args[vars[k] - 1] = nth_element(A, field_elems, 0);
    for (;;) {
        Element base = evaluate(f, args);
        for (std::size_t slot = 0; slot < n; ++slot) {
            Element saved = args[vars[slot] - 1];
            for (const auto& alpha : field_elems) {
                if (alpha.is_zero()) continue;
                args[vars[slot] - 1] = saved + z.scaled(alpha);
                if (evaluate(f, args) != base) {
                    args[vars[slot] - 1] = saved;
                    return false;
                }
            }
            args[vars[slot] - 1] = saved;
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == total) idx[k++] = 0;
        if (k == n) break;
        for (std::size_t j = 0; j <= k && j < n; ++j) args[vars[j] - 1] = nth_element(A, field_elems, idx[j]);
    }
    return true;
}

struct ElementLess {
    bool operator()(const Element& a, const Element& b) const { return a.less(b); }
};

}  // namespace

bool is_eradicator(const Element& z, const FreePoly& f, MarginalMethod method, std::uint64_t cap) {
    const AlgebraPtr& A = z.model();
    require_field_match(f, A);
    if (method == MarginalMethod::Kernel) {
        if (!f.is_multilinear()) throw Error("kernel method requires a multilinear polynomial");
        bool ok = true;
        for_each_slot_tuple(f, A, cap, [&](std::uint32_t slot_var, std::vector<Element>& args) {
            args[slot_var - 1] = z;
            if (!evaluate(f, args).is_zero()) ok = false;
            return ok;
        });
        return ok;
    }
    return eradicates_by_enumeration(z, f, cap);
}

Subspace marginal_subspace(const FreePoly& f, const AlgebraPtr& A, MarginalMethod method,
                           std::uint64_t cap) {
    require_field_match(f, A);
    if (f.is_zero()) return Subspace::full(A);
    if (method == MarginalMethod::Kernel) return marginal_kernel(f, A, cap);

    if (!A->field()->finite()) throw Error("enumerate method requires a finite field");
    mpz_class count = A->element_count();
    if (count > cap) throw CapError("algebra too large to enumerate: |A| = " + count.get_str());
    std::vector<Scalar> field_elems = A->field()->elements();
    const std::uint64_t total = static_cast<std::uint64_t>(count.get_ui());
    std::set<Element, ElementLess> eradicators;
    std::vector<std::vector<Scalar>> gens;
    for (std::uint64_t i = 0; i < total; ++i) {
        Element z = nth_element(A, field_elems, i);
        if (eradicates_by_enumeration(z, f, cap)) {
            gens.push_back(z.coords());
            eradicators.insert(std::move(z));
        }
    }
    Subspace span = Subspace::span(A, gens);
    // certificate: the eradicator set itself must be a subspace
    mpz_class expected = pow_count(A->field()->cardinality(), span.dim());
    if (expected != static_cast<long>(eradicators.size()))
        throw CertificationError("eradicator set is not closed under addition/scaling: " +
                                 std::to_string(eradicators.size()) + " elements span a subspace of " +
                                 expected.get_str());
    return span;
}

MarginalResult marginal_all(const FreePoly& f, const AlgebraPtr& A, MarginalMethod method,
                            std::uint64_t cap) {
    MarginalResult out{Subspace::zero(A), Subspace::zero(A), Subspace::zero(A), method,
                       method == MarginalMethod::Enumerate};
    out.s_hat = marginal_subspace(f, A, method, cap);
    out.i_hat = largest_ideal_inside(out.s_hat);
    out.a_core = subalgebra_core(out.s_hat);

    if (f == bracket(FreePoly::indeterminate(f.field(), 1), FreePoly::indeterminate(f.field(), 2))) {
        Subspace expected = centre(A).intersect(annihilator_of(commutator_subspace(A)));
        if (out.i_hat != expected)
            throw CertificationError(
                "marginal ideal of [x1,x2] differs from centre(A) meet ann[A,A]: dims " +
                std::to_string(out.i_hat.dim()) + " vs " + std::to_string(expected.dim()));
    }
    return out;
}

Subspace ann_tower(const AlgebraPtr& A, unsigned n) {
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    Subspace W = Subspace::zero(A);
    for (unsigned step = 0; step < n; ++step) {
        ConstraintAccum acc(A);
        for (std::size_t i = 0; i < d && !acc.saturated(); ++i) {
            Element ei = A->basis_element(i);
            std::vector<std::vector<Scalar>> left(d), right(d);
            for (std::size_t j = 0; j < d; ++j) {
                Element ej = A->basis_element(j);
                left[j] = W.reduce((ej * ei).coords());
                right[j] = W.reduce((ei * ej).coords());
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
        if (next == W) return W;  // tower stabilized
        W = next;
    }
    return W;
}

Subspace lie_series(const AlgebraPtr& A, LieSeries kind, unsigned n) {
    if (n < 1) throw Error("lie series index starts at 1");
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    if (kind == LieSeries::Upper) {
        Subspace Z = Subspace::zero(A);
        for (unsigned step = 0; step < n; ++step) {
            ConstraintAccum acc(A);
            for (std::size_t i = 0; i < d && !acc.saturated(); ++i) {
                Element ei = A->basis_element(i);
                std::vector<std::vector<Scalar>> images(d);
                for (std::size_t j = 0; j < d; ++j)
                    images[j] = Z.reduce(bracket(A->basis_element(j), ei).coords());
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
            Subspace next = acc.solution_space();
            if (next == Z) return Z;
            Z = next;
        }
        return Z;
    }
    Subspace G = Subspace::full(A);
    for (unsigned step = 1; step < n; ++step) {
        std::vector<std::vector<Scalar>> gens;
        for (const auto& g : G.rows())
            for (std::size_t i = 0; i < d; ++i) {
                auto ge = A->multiply(g, A->basis_element(i).coords());
                auto eg = A->multiply(A->basis_element(i).coords(), g);
                for (std::size_t c = 0; c < d; ++c) ge[c] -= eg[c];
                gens.push_back(std::move(ge));
            }
        Subspace next = Subspace::span(A, gens);
        if (next == G) return G;
        G = next;
    }
    return G;
}

CheckReport marginal_perfect_check(const FreePoly& f, const AlgebraPtr& A, const PerfectMode& mode,
                                   std::uint64_t seed, std::uint64_t cap) {
    require_field_match(f, A);
    CheckReport r;
    r.scenario = "marginal_perfect";
    r.seed = seed;
    MarginalMethod method = auto_marginal_method(f, A);
    Subspace S = marginal_subspace(f, A, method, cap);
    r.quantity("dim_S_hat", static_cast<std::int64_t>(S.dim()));
    const std::size_t s = S.dim();
    std::uint64_t checked = 0;
    bool closed = true;
    std::string witness;

    if (mode.exhaustive) {
        if (!A->field()->finite()) throw Error("exhaustive perfectness check needs a finite field");
        if (S.codim() == 0) {
            // S_hat is all of A (f is a PI); closure is immediate
            r.quantity("pairs_checked", "all (marginal subspace is the whole algebra)");
            r.check_true("z1 z2 stays in the marginal subspace", true, "PAPER");
            return r;
        }
        mpz_class q = A->field()->cardinality();
        mpz_class pairs = pow_count(q, 2 * s);
        if (pairs > cap)
            throw CapError("exhaustive perfectness needs " + pairs.get_str() + " pairs, above cap");
        std::vector<Scalar> field_elems = A->field()->elements();
        const std::uint64_t total = static_cast<std::uint64_t>(pow_count(q, s).get_ui());
        auto member = [&](std::uint64_t idx) {
            std::vector<Scalar> coords(A->dim(), A->field()->zero());
            for (std::size_t i = 0; i < s; ++i) {
                const Scalar& c = field_elems[idx % field_elems.size()];
                idx /= field_elems.size();
                if (c.is_zero()) continue;
                for (std::size_t j = 0; j < A->dim(); ++j) coords[j] += c * S.rows()[i][j];
            }
            return A->element(std::move(coords));
        };
        for (std::uint64_t i = 0; i < total && closed; ++i) {
            Element z1 = member(i);
            for (std::uint64_t j = 0; j < total; ++j) {
                Element z2 = member(j);
                ++checked;
                if (!S.contains(z1 * z2)) {
                    closed = false;
                    witness = "z1 = " + z1.to_string() + ", z2 = " + z2.to_string();
                    break;
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (unsigned iter = 0; iter < mode.samples && closed; ++iter) {
            auto random_member = [&] {
                std::vector<Scalar> coords(A->dim(), A->field()->zero());
                for (std::size_t i = 0; i < s; ++i) {
                    long c = static_cast<long>(rng() % 7) - 3;
                    if (c == 0) continue;
                    Scalar sc = A->field()->from_integer(c);
                    for (std::size_t j = 0; j < A->dim(); ++j) coords[j] += sc * S.rows()[i][j];
                }
                return A->element(std::move(coords));
            };
            Element z1 = random_member(), z2 = random_member();
            ++checked;
            if (!S.contains(z1 * z2)) {
                closed = false;
                witness = "z1 = " + z1.to_string() + ", z2 = " + z2.to_string();
            }
        }
    }
    r.quantity("pairs_checked", static_cast<std::int64_t>(checked));
    r.check_true("z1 z2 stays in the marginal subspace", closed, "PAPER", witness);
    return r;
}

CheckReport stewart_check(const FreePoly& f, const AlgebraPtr& A, std::uint64_t cap) {
    require_field_match(f, A);
    CheckReport r;
    r.scenario = "stewart";
    Subspace S_hat = marginal_subspace(f, A, auto_marginal_method(f, A), cap);
    SpanResult S = verbal_subspace(f, A, StrategyOpts{auto_strategy(f, A), cap});
    if (!S.exact) throw Error("stewart check needs an exact verbal strategy");
    r.quantity("codim_S_hat", static_cast<std::int64_t>(S_hat.codim()));
    r.quantity("dim_S", static_cast<std::int64_t>(S.space.dim()));
    // in finite dimension both sides are finite; the recorded implication
    // (marginally a PI forces almost a PI) cannot fail here
    r.check_true("dim S_A(f) finite when codim S_hat finite", S.space.dim() <= A->dim(), "PAPER");
    return r;
}

}  // namespace pilab
