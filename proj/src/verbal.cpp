#include "pilab/verbal.hpp"

#include <cstdlib>
#include <set>

namespace pilab {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::BasisTuples: return "basis";
        case Strategy::Enumerate: return "enum";
        case Strategy::Polarize: return "polarize";
    }
    return "?";
}

std::uint64_t default_enum_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("PILAB_ENUM_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t(1) << 20;
    }();
    return cap;
}

Strategy auto_strategy(const FreePoly& f, const AlgebraPtr& A) {
    if (f.is_multilinear()) return Strategy::BasisTuples;
    if (A->field()->finite()) return Strategy::Enumerate;
    return Strategy::Polarize;
}

bool lie_guard_holds(const FreePoly& f) {
    if (!f.field()->finite()) return true;
    DegreeProfile prof = degree_profile(f);
    mpz_class q = f.field()->cardinality();
    if (q >= static_cast<long>(prof.max_indet_degree) + 1) return true;
    return prof.homogeneous && q >= static_cast<long>(prof.max_indet_degree);
}

FreePoly bound_commutator(const FreePoly& f) {
    if (f.is_zero()) throw Error("bound commutator of the zero polynomial");
    return bracket(f, FreePoly::indeterminate(f.field(), f.max_index() + 1));
}

namespace {

void require_field_match(const FreePoly& f, const AlgebraPtr& A) {
    if (!f.field()->same(*A->field()))
        throw MismatchError("polynomial over " + f.field()->name() + " evaluated on an algebra over " +
                            A->field()->name());
}

mpz_class pow_count(std::uint64_t base, std::size_t exp) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return n;
}

// span of f over all basis argument tuples; exact for multilinear f
Subspace span_over_basis_tuples(const FreePoly& f, const AlgebraPtr& A, std::uint64_t cap) {
    auto vars = f.support_indices();
    const std::size_t n = vars.size(), d = A->dim();
    ConstraintAccum span(A);
    if (n == 0 || d == 0) {
        if (d > 0) span.add(evaluate(f, {A->zero_element()}).coords());
        return span.row_space();
    }
    if (pow_count(d, n) > cap)
        throw CapError("basis tuple count " + pow_count(d, n).get_str() + " exceeds cap " +
                       std::to_string(cap));
    std::vector<Element> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(A->basis_element(i));
    std::vector<Element> args(f.max_index(), A->zero_element());
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t k = 0; k < n; ++k) args[vars[k] - 1] = basis[0];
    for (;;) {
        span.add(evaluate(f, args).coords());
        if (span.saturated()) break;
        std::size_t k = 0;
        while (k < n && ++idx[k] == d) idx[k++] = 0;
        if (k == n) break;
        for (std::size_t j = 0; j <= k; ++j) args[vars[j] - 1] = basis[idx[j]];
    }
    return span.row_space();
}

// decodes the element with the given mixed-radix index over the scalar list
Element nth_element(const AlgebraPtr& A, const std::vector<Scalar>& field_elems, std::uint64_t n) {
    std::vector<Scalar> coords(A->dim(), A->field()->zero());
    const std::uint64_t q = field_elems.size();
    for (std::size_t i = 0; i < A->dim(); ++i) {
        coords[i] = field_elems[n % q];
        n /= q;
    }
    return A->element(std::move(coords));
}

// span of f over all element tuples of A (finite field); exact
Subspace span_over_all_tuples(const FreePoly& f, const AlgebraPtr& A, std::uint64_t cap) {
    if (!A->field()->finite()) throw Error("Enumerate strategy requires a finite field");
    auto vars = f.support_indices();
    const std::size_t n = vars.size();
    ConstraintAccum span(A);
    if (n == 0 || A->dim() == 0) {
        if (A->dim() > 0) span.add(evaluate(f, {A->zero_element()}).coords());
        return span.row_space();
    }
    mpz_class total_mpz = A->element_count();
    mpz_class tuples;
    mpz_pow_ui(tuples.get_mpz_t(), total_mpz.get_mpz_t(), static_cast<unsigned long>(n));
    if (tuples > cap)
        throw CapError("enumeration needs " + tuples.get_str() + " tuples, above the cap of " +
                       std::to_string(cap) + " (raise PILAB_ENUM_CAP to override)");
    const std::uint64_t total = static_cast<std::uint64_t>(total_mpz.get_ui());
    std::vector<Scalar> field_elems = A->field()->elements();
    std::vector<Element> args(f.max_index(), A->zero_element());

    std::vector<std::uint64_t> idx(n, 0);
    for (std::size_t k = 0; k < n; ++k) args[vars[k] - 1] = nth_element(A, field_elems, 0);
    for (;;) {
        span.add(evaluate(f, args).coords());
        if (span.saturated()) break;
        std::size_t k = 0;
        while (k < n && ++idx[k] == total) idx[k++] = 0;
        if (k == n) break;
        for (std::size_t j = 0; j <= k && j < n; ++j) args[vars[j] - 1] = nth_element(A, field_elems, idx[j]);
    }
    return span.row_space();
}

}  // namespace

SpanResult verbal_subspace(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    require_field_match(f, A);
    if (f.is_zero()) return {Subspace::zero(A), true};
    switch (opts.strategy) {
        case Strategy::BasisTuples:
            if (!f.is_multilinear())
                throw Error("BasisTuples strategy requires a multilinear polynomial");
            return {span_over_basis_tuples(f, A, opts.enum_cap), true};
        case Strategy::Enumerate:
            return {span_over_all_tuples(f, A, opts.enum_cap), true};
        case Strategy::Polarize: {
            const bool char0 = !f.field()->finite();
            DegreeProfile prof = degree_profile(f);
            if (!char0) {
                mpz_class q = f.field()->cardinality();
                if (q < static_cast<long>(prof.max_indet_degree) + 1)
                    throw Error("Polarize over a finite field needs |K| >= m+1; |K| = " +
                                q.get_str() + ", m = " + std::to_string(prof.max_indet_degree));
            }
            Subspace sum = Subspace::zero(A);
            bool all_multilinear = true;
            for (const auto& [deg, comp] : homogeneous_decompose(f)) {
                std::vector<FreePoly> polys;
                if (comp.is_multilinear())
                    polys.push_back(comp);
                else {
                    all_multilinear = false;
                    polys = multilinearize(comp);
                }
                for (const auto& g : polys)
                    sum = sum + span_over_basis_tuples(g, A, opts.enum_cap);
            }
            return {sum, char0 || all_multilinear};
        }
    }
    throw Error("bad strategy");
}

SpanResult verbal_subalgebra(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    SpanResult s = verbal_subspace(f, A, opts);
    return {subalgebra_closure(s.space), s.exact};
}

SpanResult verbal_ideal(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    SpanResult s = verbal_subspace(f, A, opts);
    return {ideal_closure(s.space), s.exact};
}

bool is_pi(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    SpanResult s = verbal_subspace(f, A, opts);
    if (s.space.dim() > 0) return false;  // a nonzero lower bound already certifies non-PI
    if (!s.exact)
        throw InconclusiveError(
            "zero lower bound from strategy " + strategy_name(opts.strategy) +
            " cannot certify a polynomial identity; use an exact strategy");
    return true;
}

PiWitnessResult pi_witness(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    SpanResult s = verbal_subspace(f, A, opts);
    if (!s.exact) throw Error("pi_witness requires an exact strategy for dim S_A(f)");
    const std::size_t t = s.space.dim();
    const FieldPtr& K = f.field();
    FreePoly st = standard_poly(K, static_cast<unsigned>(t + 1));
    const std::uint32_t n = f.max_index();
    std::map<std::uint32_t, FreePoly> blocks;
    for (std::uint32_t j = 1; j <= t + 1; ++j) {
        std::map<std::uint32_t, FreePoly> shift;
        for (auto i : f.support_indices())
            shift.emplace(i, FreePoly::indeterminate(K, i + (j - 1) * n));
        blocks.emplace(j, substitute(f, shift));
    }
    FreePoly g = substitute(st, blocks);

    // certification
    if (g.is_multilinear()) {
        // distinct nonzero f-values over basis tuples; the standard polynomial
        // vanishes identically on tuples with a repeated or zero argument, so
        // increasing combinations of distinct values are exhaustive
        auto vars = f.support_indices();
        const std::size_t nv = vars.size(), d = A->dim();
        if (pow_count(d, nv) > opts.enum_cap) throw CapError("witness certification above tuple cap");
        std::vector<Element> values;
        auto record = [&](const Element& v) {
            if (v.is_zero()) return;
            for (const auto& u : values)
                if (u == v) return;
            values.push_back(v);
        };
        std::vector<Element> basis;
        for (std::size_t i = 0; i < d; ++i) basis.push_back(A->basis_element(i));
        std::vector<Element> args(n, A->zero_element());
        std::vector<std::size_t> idx(nv, 0);
        for (;;) {
            for (std::size_t k = 0; k < nv; ++k) args[vars[k] - 1] = basis[idx[k]];
            record(evaluate(f, args));
            std::size_t k = 0;
            while (k < nv && ++idx[k] == d) idx[k++] = 0;
            if (k == nv) break;
        }
        if (values.size() >= t + 1) {
            const std::size_t k = t + 1, N = values.size();
            std::vector<std::size_t> comb(k);
            for (std::size_t i = 0; i < k; ++i) comb[i] = i;
            auto next_combination = [&]() {
                std::size_t i = k;
                while (i > 0) {
                    --i;
                    if (comb[i] < N - k + i) {
                        ++comb[i];
                        for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                        return true;
                    }
                }
                return false;
            };
            do {
                std::vector<Element> tuple;
                for (auto c : comb) tuple.push_back(values[c]);
                Element w = evaluate(st, tuple);
                if (!w.is_zero()) {
                    std::string witness;
                    for (const auto& e : tuple) witness += "(" + e.to_string() + ") ";
                    throw CertificationError("pi_witness certification failed at f-values " + witness +
                                             "-> " + w.to_string());
                }
            } while (next_combination());
        }
    } else if (K->finite()) {
        SpanResult check = verbal_subspace(g, A, StrategyOpts{Strategy::Enumerate, opts.enum_cap});
        if (check.space.dim() != 0)
            throw CertificationError("pi_witness certification failed: S_A(g) has dimension " +
                                     std::to_string(check.space.dim()));
    } else {
        throw Error("cannot certify a non-multilinear witness over an infinite field");
    }
    return {std::move(g), t};
}

CheckReport concision_bounds(const FreePoly& f, const AlgebraPtr& A, const StrategyOpts& opts) {
    require_field_match(f, A);
    CheckReport r;
    r.scenario = "concision_bounds";
    FreePoly g = bound_commutator(f);
    StrategyOpts gopts = opts;
    if (g.is_multilinear()) gopts.strategy = Strategy::BasisTuples;
    SpanResult Sg = verbal_subspace(g, A, gopts);
    if (!Sg.exact) throw Error("concision bounds need an exact strategy for S_A(g)");
    SpanResult Sf = verbal_subspace(f, A, opts);
    if (!Sf.exact) throw Error("concision bounds need an exact strategy for S_A(f)");
    const mpz_class t_g = static_cast<long>(Sg.space.dim());
    const mpz_class t_f = static_cast<long>(Sf.space.dim());
    Subspace Ig = ideal_closure(Sg.space);
    Subspace Af = subalgebra_closure(Sf.space);
    DegreeProfile prof = degree_profile(f);
    const bool guard = lie_guard_holds(f);

    r.quantity("m", static_cast<std::int64_t>(prof.max_indet_degree));
    r.quantity("r", static_cast<std::int64_t>(prof.max_component_min_degree));
    r.quantity("dim_S_g", t_g.get_str());
    r.quantity("dim_I_g", static_cast<std::int64_t>(Ig.dim()));
    r.quantity("dim_S_f", t_f.get_str());
    r.quantity("dim_A_f", static_cast<std::int64_t>(Af.dim()));
    r.quantity("guard", guard ? "sharp" : "weak");

    mpz_class weak = t_g * (t_g * t_g + 1) * (t_g * t_g + 1);
    r.check_true("ideal_bound_weak dim I_A(g) <= t(t^2+1)^2",
                 mpz_class(static_cast<long>(Ig.dim())) <= weak, "PAPER",
                 "dim I_A(g) = " + std::to_string(Ig.dim()) + " > " + weak.get_str());
    if (guard) {
        mpz_class sharp = t_g * (t_g * t_g + 1);
        r.check_true("ideal_bound_sharp dim I_A(g) <= t(t^2+1)",
                     mpz_class(static_cast<long>(Ig.dim())) <= sharp, "PAPER",
                     "dim I_A(g) = " + std::to_string(Ig.dim()) + " > " + sharp.get_str());
        mpz_class rr = static_cast<long>(prof.max_component_min_degree);
        mpz_class r_pow_t, r_pow_t1;
        mpz_pow_ui(r_pow_t.get_mpz_t(), rr.get_mpz_t(), t_f.get_ui());
        if (t_f > 0)
            mpz_pow_ui(r_pow_t1.get_mpz_t(), rr.get_mpz_t(), mpz_class(t_f - 1).get_ui());
        else
            r_pow_t1 = 0;
        mpz_class subalg = (r_pow_t - 1) + t_f * r_pow_t1 + t_f * (t_f * t_f + 1);
        r.check_true("subalgebra_bound dim A_A(f) <= (r^t-1)+t r^(t-1)+t(t^2+1)",
                     mpz_class(static_cast<long>(Af.dim())) <= subalg, "PAPER",
                     "dim A_A(f) = " + std::to_string(Af.dim()) + " > " + subalg.get_str());
    }
    if (prof.multilinear) {
        mpz_class ml = t_f + t_f * (t_f * t_f + 1);
        r.check_true("subalgebra_bound_multilinear dim A_A(f) <= t+t(t^2+1)",
                     mpz_class(static_cast<long>(Af.dim())) <= ml, "PAPER",
                     "dim A_A(f) = " + std::to_string(Af.dim()) + " > " + ml.get_str());
    }
    return r;
}

namespace {

// image of a subspace of A inside the hull (coordinates shifted past the unit)
std::vector<std::vector<Scalar>> embed_in_hull(const Subspace& S, const AlgebraPtr& H) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : S.rows()) {
        std::vector<Scalar> v{H->field()->zero()};
        v.insert(v.end(), row.begin(), row.end());
        rows.push_back(std::move(v));
    }
    return rows;
}

Subspace hull_span_with_unit(const Subspace& S, const AlgebraPtr& H) {
    auto rows = embed_in_hull(S, H);
    std::vector<Scalar> unit(H->dim(), H->field()->zero());
    unit[0] = H->field()->one();
    rows.push_back(std::move(unit));
    return Subspace::span(H, rows);
}

Subspace subspace_product(const Subspace& U, const Subspace& V) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& u : U.rows())
        for (const auto& v : V.rows()) rows.push_back(U.ambient()->multiply(u, v));
    return Subspace::span(U.ambient(), rows);
}

}  // namespace

CheckReport decomposition_check(const FreePoly& f, const AlgebraPtr& A) {
    require_field_match(f, A);
    CheckReport r;
    r.scenario = "decomposition";
    DegreeProfile prof = degree_profile(f);
    if (f.field()->finite()) {
        mpz_class q = f.field()->cardinality();
        if (q < static_cast<long>(prof.max_indet_degree) + 1)
            throw Error("decomposition check needs |K| >= m+1: |K| = " + q.get_str() +
                        " < m+1 = " + std::to_string(prof.max_indet_degree + 1));
    }
    auto exact_span = [&](const FreePoly& p) {
        SpanResult out = verbal_subspace(p, A, StrategyOpts{auto_strategy(p, A)});
        if (!out.exact) throw Error("decomposition check needs exact strategies");
        return out.space;
    };
    auto comps = homogeneous_decompose(f);
    r.quantity("components", static_cast<std::int64_t>(comps.size()));

    Subspace S = exact_span(f);
    Subspace Ssum = Subspace::zero(A);
    std::vector<Subspace> comp_spans;
    for (const auto& [deg, comp] : comps) {
        comp_spans.push_back(exact_span(comp));
        Ssum = Ssum + comp_spans.back();
    }
    r.quantity("dim_S", static_cast<std::int64_t>(S.dim()));
    r.check_true("S_A(f) = sum of component subspaces", S == Ssum, "PAPER",
                 "dims " + std::to_string(S.dim()) + " vs " + std::to_string(Ssum.dim()));

    Subspace I = ideal_closure(S);
    Subspace Isum = Subspace::zero(A);
    for (const auto& cs : comp_spans) Isum = Isum + ideal_closure(cs);
    r.check_true("I_A(f) = sum of component ideals", I == Isum, "PAPER",
                 "dims " + std::to_string(I.dim()) + " vs " + std::to_string(Isum.dim()));

    AlgebraPtr H = unital_hull(A);
    Subspace lhs = hull_span_with_unit(subalgebra_closure(S), H);
    Subspace rhs = hull_span_with_unit(subalgebra_closure(comp_spans[0]), H);
    for (std::size_t i = 1; i < comp_spans.size(); ++i)
        rhs = subspace_product(rhs, hull_span_with_unit(subalgebra_closure(comp_spans[i]), H));
    r.check_true("(A_A(f))_1 = product of component hulls", lhs == rhs, "PAPER",
                 "dims " + std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()));
    return r;
}

CheckReport corollary_inclusion(const FreePoly& f, const AlgebraPtr& A) {
    require_field_match(f, A);
    if (!f.is_multilinear()) throw Error("corollary inclusion requires a multilinear polynomial");
    CheckReport r;
    r.scenario = "corollary_inclusion";
    StrategyOpts opts{Strategy::BasisTuples};
    Subspace S = verbal_subspace(f, A, opts).space;
    Subspace Asub = subalgebra_closure(S);
    FreePoly g = bound_commutator(f);
    Subspace Ig = ideal_closure(verbal_subspace(g, A, opts).space);
    r.quantity("dim_A", static_cast<std::int64_t>(Asub.dim()));
    r.quantity("dim_S_plus_Ig", static_cast<std::int64_t>((S + Ig).dim()));
    r.check_true("A_A(f) inside S_A(f) + I_A(g)", (S + Ig).contains(Asub), "PAPER");
    return r;
}

}  // namespace pilab
