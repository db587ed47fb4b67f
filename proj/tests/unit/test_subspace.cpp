#include <random>

#include "doctest.h"
#include "pilab/subspace.hpp"

using namespace pilab;

namespace {
const FieldPtr Q = Field::rationals();

// all subspaces of an F2 algebra of small dimension, via spans of all subsets
// of nonzero vectors (deduplicated by canonical form)
std::vector<Subspace> all_f2_subspaces(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    const std::size_t d = A->dim();
    std::vector<std::vector<Scalar>> vecs;
    for (std::uint64_t mask = 1; mask < (1ull << d); ++mask) {
        std::vector<Scalar> v(d, F->zero());
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1ull << i)) v[i] = F->one();
        vecs.push_back(std::move(v));
    }
    std::vector<Subspace> out{Subspace::zero(A)};
    for (std::uint64_t mask = 1; mask < (1ull << vecs.size()); ++mask) {
        std::vector<std::vector<Scalar>> gens;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (mask & (1ull << i)) gens.push_back(vecs[i]);
        Subspace s = Subspace::span(A, gens);
        bool dup = false;
        for (const auto& t : out)
            if (t == s) dup = true;
        if (!dup) out.push_back(std::move(s));
    }
    return out;
}

// small catalog of F2 algebras of dimension <= 3 used by exhaustive oracles
std::vector<AlgebraPtr> f2_mini_catalog() {
    auto F2 = Field::prime(2);
    std::vector<AlgebraPtr> out;
    out.push_back(truncated_poly(F2, 4, false));      // nilpotent, dim 3
    out.push_back(truncated_poly(F2, 3, true));       // unital commutative, dim 3
    out.push_back(group_algebra(F2, cyclic_group(3, nullptr), {}, "F2[Z/3]"));
    // upper triangular 2x2: e11, e12, e22 (noncommutative, unital)
    std::vector<TableEntry> t{{0, 0, 0, F2->one()}, {0, 1, 1, F2->one()},
                              {1, 2, 1, F2->one()}, {2, 2, 2, F2->one()}};
    out.push_back(algebra_from_table(F2, {"e11", "e12", "e22"}, t,
                                     std::vector<Scalar>{F2->one(), F2->zero(), F2->one()},
                                     "upper2(F2)"));
    return out;
}
}  // namespace

TEST_CASE("span and canonical form") {
    auto M2 = matrix_algebra(Q, 2);
    Element e11 = M2->basis_element(0), e22 = M2->basis_element(3);
    Subspace S = Subspace::span_elements(M2, {e11, e11 + e22, e22});
    CHECK(S.dim() == 2);

    CHECK(Subspace::span_elements(M2, {}).dim() == 0);

    // span of all basis commutators is the trace-zero subspace, dim 3
    std::vector<Element> brackets;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            brackets.push_back(bracket(M2->basis_element(i), M2->basis_element(j)));
    Subspace sl2 = Subspace::span_elements(M2, brackets);
    CHECK(sl2.dim() == 3);
    Subspace expected = Subspace::span_elements(
        M2, {M2->basis_element(1), M2->basis_element(2), e11 - e22});
    CHECK(sl2 == expected);

    // canonicity: reordering and rescaling the generators gives the same matrix
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<std::vector<Scalar>> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Scalar> v;
            for (int i = 0; i < 4; ++i)
                v.push_back(Q->from_integer(static_cast<long>(rng() % 9) - 4));
            gens.push_back(v);
        }
        Subspace a = Subspace::span(M2, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        for (auto& v : gens) {
            Scalar c = Q->from_integer(1 + static_cast<long>(rng() % 5));
            for (auto& x : v) x = x * c;
        }
        Subspace b = Subspace::span(M2, gens);
        CHECK(a == b);
        CHECK(a.rows() == b.rows());
    }
}

TEST_CASE("lattice operations") {
    auto M2 = matrix_algebra(Q, 2);
    Subspace sl2 = Subspace::span_elements(
        M2, {M2->basis_element(1), M2->basis_element(2),
             M2->basis_element(0) - M2->basis_element(3)});
    CHECK(sl2 + sl2 == sl2);
    CHECK(sl2.intersect(Subspace::full(M2)) == sl2);
    CHECK(sl2.intersect(Subspace::span_elements(M2, {M2->basis_element(0)})).dim() == 0);
    CHECK(sl2.codim() == 1);
    CHECK(Subspace::full(M2).contains(sl2));
    CHECK(!sl2.contains(M2->basis_element(0)));
    CHECK(sl2.contains(M2->basis_element(1)));

    // intersection against random pairs: dim(U) + dim(V) = dim(U+V) + dim(U cap V)
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 25; ++iter) {
        auto rand_space = [&] {
            std::vector<std::vector<Scalar>> gens;
            for (int g = 0; g < 2; ++g) {
                std::vector<Scalar> v;
                for (int i = 0; i < 4; ++i)
                    v.push_back(Q->from_integer(static_cast<long>(rng() % 5) - 2));
                gens.push_back(v);
            }
            return Subspace::span(M2, gens);
        };
        Subspace U = rand_space(), V = rand_space();
        Subspace I = U.intersect(V), S = U + V;
        CHECK(U.dim() + V.dim() == S.dim() + I.dim());
        CHECK(U.contains(I));
        CHECK(V.contains(I));
        CHECK(S.contains(U));
    }
}

TEST_CASE("kernels") {
    auto M2 = matrix_algebra(Q, 2);
    Element e11 = M2->basis_element(0);
    // kernel of a -> [e11, a] is the diagonal span{e11, e22}
    std::vector<Element> images;
    for (std::size_t i = 0; i < 4; ++i) images.push_back(bracket(e11, M2->basis_element(i)));
    Subspace K = kernel_of_map(M2, images);
    CHECK(K.dim() == 2);
    CHECK(K == Subspace::span_elements(M2, {M2->basis_element(0), M2->basis_element(3)}));

    // identity map has zero kernel
    std::vector<Element> ident;
    for (std::size_t i = 0; i < 4; ++i) ident.push_back(M2->basis_element(i));
    CHECK(kernel_of_map(M2, ident).dim() == 0);

    // zero map has full kernel
    std::vector<Element> zero(4, M2->zero_element());
    CHECK(kernel_of_map(M2, zero) == Subspace::full(M2));
}

TEST_CASE("subalgebra closure") {
    auto M2 = matrix_algebra(Q, 2);
    Subspace sl2 = Subspace::span_elements(
        M2, {M2->basis_element(1), M2->basis_element(2),
             M2->basis_element(0) - M2->basis_element(3)});
    Subspace closed = subalgebra_closure(sl2);
    CHECK(closed == Subspace::full(M2));

    CHECK(subalgebra_closure(closed) == closed);  // idempotent on a subalgebra

    auto T4 = truncated_poly(Q, 4, false);
    Subspace t_span = Subspace::span_elements(T4, {T4->basis_element(0)});
    CHECK(subalgebra_closure(t_span) == Subspace::full(T4));  // t generates t, t^2, t^3
}

TEST_CASE("ideal closure") {
    auto F2 = Field::prime(2);
    auto KG = group_algebra(F2, elementary_abelian(2, 2, nullptr));
    Subspace one = Subspace::span_elements(KG, {KG->unit_element()});
    CHECK(ideal_closure(one) == Subspace::full(KG));

    CHECK(ideal_closure(Subspace::zero(KG)).dim() == 0);

    // span{t^2} inside unital F2[t]/(t^8): the ideal is span{t^2, ..., t^7}
    auto T8 = truncated_poly(F2, 8, true);
    Subspace t2 = Subspace::span_elements(T8, {T8->basis_element(2)});
    Subspace I = ideal_closure(t2);
    // brute-force oracle: span of all t^a * t^2 * t^b
    std::vector<Element> products;
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            products.push_back(T8->basis_element(a) * T8->basis_element(2) * T8->basis_element(b));
    products.push_back(T8->basis_element(2));
    Subspace oracle = Subspace::span_elements(T8, products);
    CHECK(I == oracle);
    CHECK(I.dim() == 6);

    // chain and monotonicity on random subspaces
    std::mt19937_64 rng(23);
    auto M2 = matrix_algebra(Q, 2);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<std::vector<Scalar>> gens;
        for (int g = 0; g < 2; ++g) {
            std::vector<Scalar> v;
            for (int i = 0; i < 4; ++i)
                v.push_back(Q->from_integer(static_cast<long>(rng() % 5) - 2));
            gens.push_back(v);
        }
        Subspace S = Subspace::span(M2, gens);
        Subspace A_cl = subalgebra_closure(S), I_cl = ideal_closure(S);
        CHECK(A_cl.contains(S));
        CHECK(I_cl.contains(A_cl));
        CHECK(subalgebra_closure(A_cl) == A_cl);
        CHECK(ideal_closure(I_cl) == I_cl);
        CHECK(is_subalgebra(A_cl));
        CHECK(is_ideal(I_cl));
    }
}

TEST_CASE("ideal closure agrees when computed through the unital hull") {
    auto M2 = matrix_algebra(Q, 2);
    auto H = unital_hull(M2);
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<std::vector<Scalar>> gens;
        for (int g = 0; g < 2; ++g) {
            std::vector<Scalar> v;
            for (int i = 0; i < 4; ++i)
                v.push_back(Q->from_integer(static_cast<long>(rng() % 5) - 2));
            gens.push_back(v);
        }
        Subspace S = Subspace::span(M2, gens);
        Subspace I = ideal_closure(S);

        // image of S in the hull (coordinates shifted past the formal unit)
        std::vector<std::vector<Scalar>> hull_gens;
        for (const auto& row : S.rows()) {
            std::vector<Scalar> v{Q->zero()};
            v.insert(v.end(), row.begin(), row.end());
            hull_gens.push_back(v);
        }
        // closure under the hull action u z v stays inside the embedded copy of A
        Subspace J = ideal_closure(Subspace::span(H, hull_gens));
        std::vector<std::vector<Scalar>> back;
        for (const auto& row : J.rows()) {
            CHECK(row[0].is_zero());
            back.push_back(std::vector<Scalar>(row.begin() + 1, row.end()));
        }
        CHECK(Subspace::span(M2, back) == I);
    }
}

TEST_CASE("largest ideal inside") {
    auto M2 = matrix_algebra(Q, 2);
    // the centre span{1} of M2 contains no nonzero ideal
    Subspace Z = Subspace::span_elements(M2, {M2->unit_element()});
    CHECK(largest_ideal_inside(Z).dim() == 0);

    // an ideal is its own largest ideal
    auto T4 = truncated_poly(Q, 4, false);
    Subspace I = Subspace::span_elements(T4, {T4->basis_element(1), T4->basis_element(2)});
    CHECK(largest_ideal_inside(I) == I);

    // E0 inside unital grassmann(Q,4): computed, then maximality probed
    auto E4 = grassmann(Q, 4, true);
    Subspace even = coordinate_subspace(E4, E4->marked_subsets().at("even"));
    Subspace best = largest_ideal_inside(even);
    CHECK(is_ideal(best));
    CHECK(even.contains(best));
    CHECK(best.dim() == 1);  // span of the top monomial e1e2e3e4
    CHECK(best.contains(E4->basis_element(E4->dim() - 1)));
    // no element of even \ best generates an ideal inside even
    for (const auto& row : even.rows()) {
        if (best.contains(row)) continue;
        Subspace gen = ideal_closure(Subspace::span(E4, {row}));
        CHECK(!even.contains(gen));
    }
}

TEST_CASE("largest ideal inside: exhaustive F2 oracle") {
    for (const auto& A : f2_mini_catalog()) {
        auto spaces = all_f2_subspaces(A);
        for (const auto& W : spaces) {
            Subspace computed = largest_ideal_inside(W);
            CHECK(is_ideal(computed));
            CHECK(W.contains(computed));
            // brute force: sum of all ideals contained in W
            Subspace best = Subspace::zero(A);
            for (const auto& V : spaces)
                if (W.contains(V) && is_ideal(V)) best = best + V;
            CHECK(computed == best);
        }
    }
}

TEST_CASE("subalgebra core") {
    auto M2 = matrix_algebra(Q, 2);
    // a subalgebra is its own core
    Subspace diag = Subspace::span_elements(M2, {M2->basis_element(0), M2->basis_element(3)});
    CHECK(subalgebra_core(diag) == diag);

    // span{e12, e21}: e12 e21 = e11 escapes, and the fixpoint collapses to 0
    Subspace W = Subspace::span_elements(M2, {M2->basis_element(1), M2->basis_element(2)});
    CHECK(subalgebra_core(W).dim() == 0);

    CHECK(subalgebra_core(Subspace::zero(M2)).dim() == 0);
}

TEST_CASE("subalgebra core over F2: containment, and maximality when unique") {
    int unique_max_cases = 0, core_equals_unique_max = 0, no_unique_max = 0;
    for (const auto& A : f2_mini_catalog()) {
        auto spaces = all_f2_subspaces(A);
        for (const auto& W : spaces) {
            Subspace core = subalgebra_core(W);
            CHECK(is_subalgebra(core));
            CHECK(W.contains(core));
            // find a unique maximum subalgebra inside W, when one exists
            std::vector<const Subspace*> subs;
            for (const auto& V : spaces)
                if (W.contains(V) && is_subalgebra(V)) subs.push_back(&V);
            const Subspace* max = nullptr;
            for (auto* cand : subs) {
                bool contains_all = true;
                for (auto* other : subs)
                    if (!cand->contains(*other)) contains_all = false;
                if (contains_all) max = cand;
            }
            if (max) {
                ++unique_max_cases;
                if (core == *max) ++core_equals_unique_max;
            } else {
                ++no_unique_max;
                // the fixpoint may legitimately land below every maximal
                // subalgebra here; containment was already asserted above
            }
        }
    }
    CHECK(unique_max_cases > 0);
    MESSAGE("unique-maximum cases: ", unique_max_cases, ", core matched: ",
            core_equals_unique_max, ", no unique maximum: ", no_unique_max);
    // When a unique maximum subalgebra exists the fixpoint is not guaranteed
    // to reach it; record the observed agreement rate instead of asserting it.
    CHECK(core_equals_unique_max > 0);
}

TEST_CASE("lie operations") {
    auto M2 = matrix_algebra(Q, 2);
    Subspace sl2 = Subspace::span_elements(
        M2, {M2->basis_element(1), M2->basis_element(2),
             M2->basis_element(0) - M2->basis_element(3)});
    CHECK(is_lie_ideal(sl2));
    CHECK(!is_lie_ideal(Subspace::span_elements(M2, {M2->basis_element(1)})));
    CHECK(is_lie_ideal(Subspace::full(M2)));
    CHECK(bracket_with_ambient(sl2) == sl2);  // [M2, sl2] = sl2
}

TEST_CASE("centre and annihilators") {
    auto M2 = matrix_algebra(Q, 2);
    CHECK(centre(M2) == Subspace::span_elements(M2, {M2->unit_element()}));
    CHECK(commutator_subspace(M2).dim() == 3);

    auto T4 = truncated_poly(Q, 4, false);
    CHECK(centre(T4) == Subspace::full(T4));  // commutative
    Subspace ann = annihilator_of(Subspace::full(T4));
    CHECK(ann == Subspace::span_elements(T4, {T4->basis_element(2)}));  // span{t^3}
}
