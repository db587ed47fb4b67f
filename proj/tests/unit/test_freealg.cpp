#include <random>

#include "doctest.h"
#include "pilab/freepoly.hpp"

using namespace pilab;

namespace {
const FieldPtr Q = Field::rationals();

FreePoly X(unsigned i) { return FreePoly::indeterminate(Q, i); }

FreePoly word(std::initializer_list<std::uint32_t> w, long c = 1) {
    return FreePoly::monomial(Q, Word(w), Q->from_integer(c));
}
}  // namespace

TEST_CASE("parsing basics") {
    CHECK(parse_poly("[x1,x2]", Q) == word({1, 2}) - word({2, 1}));
    CHECK(parse_poly("s(2)", Q) == word({1, 2}) - word({2, 1}));
    CHECK(parse_poly("g(2)", Q).term_count() == 8);
    CHECK(parse_poly("g(2)", Q) == bracket(bracket(X(1), X(2)), bracket(X(3), X(4))));
    CHECK(parse_poly("2x1x2", Q) == word({1, 2}, 2));
    CHECK(parse_poly("1/2 x1 - 1/2 x1", Q).is_zero());
    CHECK(parse_poly("x1^3", Q) == word({1, 1, 1}));
    CHECK(parse_poly("(x1+x2)x1", Q) == word({1, 1}) + word({2, 1}));
    CHECK(parse_poly("[x1,x2,x3]", Q) == bracket(bracket(X(1), X(2)), X(3)));
    CHECK(parse_poly("-x1", Q) == word({1}, -1));

    CHECK_THROWS_AS(parse_poly("x1 +", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("[x1]", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("foo(2)", Q), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^0", Q), ParseError);       // non-unital default
    CHECK(parse_poly("x1^0", Q, true) == FreePoly::unit(Q));  // unital mode

    auto F4 = Field::parse("F4=F2[t]/(t^2+t+1)");
    FreePoly f = parse_poly("a x1 + x1", F4);
    CHECK(f == FreePoly::monomial(F4, {1}, F4->generator() + F4->one()));
    CHECK(parse_poly("(a+1)x1", F4) == FreePoly::monomial(F4, {1}, F4->generator() + F4->one()));
    CHECK_THROWS_AS(parse_poly("1/2 x1", Field::prime(2)), Error);  // 2 not invertible
}

TEST_CASE("arithmetic and bracket identities") {
    CHECK(bracket(X(1), X(2)) == word({1, 2}) - word({2, 1}));
    CHECK((X(1) + X(2)) * X(1) == word({1, 1}) + word({2, 1}));

    // adjoint maps are derivations: [ab,c] = a[b,c] + [a,c]b
    FreePoly lhs = bracket(X(1) * X(2), X(3));
    FreePoly rhs = X(1) * bracket(X(2), X(3)) + bracket(X(1), X(3)) * X(2);
    CHECK(lhs == rhs);

    // semi-Jacobi: [ab,c] = [a,bc] + [b,ca]
    CHECK(bracket(X(1) * X(2), X(3)) ==
          bracket(X(1), X(2) * X(3)) + bracket(X(2), X(3) * X(1)));
}

TEST_CASE("builtin families") {
    CHECK(standard_poly(Q, 3).term_count() == 6);
    CHECK(standard_poly(Q, 1) == X(1));
    CHECK(standard_poly(Q, 2) == bracket(X(1), X(2)));
    CHECK_THROWS_AS(standard_poly(Q, 9), CapError);

    CHECK(simple_commutator(Q, 3).term_count() == 4);
    CHECK(simple_commutator(Q, 3) == bracket(bracket(X(1), X(2)), X(3)));
    CHECK(simple_commutator(Q, 1) == X(1));

    FreePoly e2 = engel_poly(Q, 2);
    CHECK(e2 == bracket(bracket(X(1), X(2)), X(2)));
    auto prof = degree_profile(e2);
    CHECK(prof.max_indet_degree == 2);
    CHECK(!prof.multilinear);
    CHECK(prof.homogeneous);

    CHECK(product_of_simples(Q, {1, 2}) == X(1) * bracket(X(2), X(3)));
    CHECK(product_of_simples(Q, {2, 2}) == bracket(X(1), X(2)) * bracket(X(3), X(4)));
}

TEST_CASE("homogeneous decomposition") {
    auto comps = homogeneous_decompose(parse_poly("x1x2 + x1", Q));
    CHECK(comps.size() == 2);

    CHECK(homogeneous_decompose(parse_poly("s(2)", Q)).size() == 1);

    auto comps2 = homogeneous_decompose(parse_poly("x1^2 + x1x2 + x2x1", Q));
    CHECK(comps2.size() == 2);
    for (const auto& [deg, comp] : comps2) {
        if (deg.count(2))
            CHECK(comp == word({1, 2}) + word({2, 1}));
        else
            CHECK(comp == word({1, 1}));
    }

    // components sum back to f, on randomized polynomials
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        FreePoly f(Q);
        for (int t = 0; t < 6; ++t) {
            Word w;
            for (std::size_t l = rng() % 4; l-- > 0;) w.push_back(1 + rng() % 3);
            if (w.empty()) continue;
            f.add_term(w, Q->from_integer(static_cast<long>(rng() % 7) - 3));
        }
        FreePoly sum(Q);
        for (const auto& [deg, comp] : homogeneous_decompose(f)) {
            CHECK(comp.is_homogeneous());
            sum = sum + comp;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("multilinearization") {
    auto out1 = multilinearize(parse_poly("[x1,x2]", Q));
    REQUIRE(out1.size() == 1);
    CHECK(out1[0] == parse_poly("[x1,x2]", Q));

    // x1^2 -> x1x2 + x2x1, frozen from the expansion (x1+x2)^2 - x1^2 - x2^2
    auto out2 = multilinearize(parse_poly("x1^2", Q));
    REQUIRE(out2.size() == 1);
    CHECK(out2[0] == word({1, 2}) + word({2, 1}));
    {
        std::map<std::uint32_t, FreePoly> a{{1, X(1) + X(2)}};
        FreePoly oracle = substitute(parse_poly("x1^2", Q), a) - word({1, 1}) - word({2, 2});
        CHECK(out2[0] == oracle);
    }

    // engel(2) -> [x1,x2,x3] + [x1,x3,x2], oracle f(x1,x2+x3) - f(x1,x2) - f(x1,x3)
    auto out3 = multilinearize(engel_poly(Q, 2));
    REQUIRE(out3.size() == 1);
    CHECK(out3[0] == simple_commutator(Q, 3) +
                         bracket(bracket(X(1), X(3)), X(2)));
    {
        FreePoly f = engel_poly(Q, 2);
        std::map<std::uint32_t, FreePoly> a{{1, X(1)}, {2, X(2) + X(3)}};
        std::map<std::uint32_t, FreePoly> b{{1, X(1)}, {2, X(2)}};
        std::map<std::uint32_t, FreePoly> c{{1, X(1)}, {2, X(3)}};
        FreePoly oracle = substitute(f, a) - substitute(f, b) - substitute(f, c);
        CHECK(out3[0] == oracle);
    }

    // every polarization is multilinear with the same total degree
    for (const char* text : {"x1^3", "x1^2x2 + x2x1^2", "engel(3)", "x1^2x2^2"}) {
        FreePoly f = parse_poly(text, Q);
        for (const auto& g : multilinearize(f)) {
            CHECK(g.is_multilinear());
            CHECK(g.total_degree() == f.total_degree());
        }
    }

    CHECK_THROWS_AS(multilinearize(parse_poly("x1^7", Q)), CapError);
    CHECK_THROWS_AS(multilinearize(parse_poly("x1 + x1x2", Q)), Error);  // not homogeneous
}

TEST_CASE("substitution") {
    std::map<std::uint32_t, FreePoly> a{{1, X(1) * X(2)}, {2, X(3)}};
    CHECK(substitute(parse_poly("[x1,x2]", Q), a) == parse_poly("[x1x2,x3]", Q));

    FreePoly f = parse_poly("x1x2 - 2x2x1", Q);
    std::map<std::uint32_t, FreePoly> id{{1, X(1)}, {2, X(2)}};
    CHECK(substitute(f, id) == f);

    std::map<std::uint32_t, FreePoly> collapse{{1, X(2)}, {2, X(2)}};
    CHECK(substitute(parse_poly("[x1,x2]", Q), collapse).is_zero());

    CHECK_THROWS_AS(substitute(parse_poly("[x1,x2]", Q), {{1, X(1)}}), Error);
}

TEST_CASE("degree profile") {
    auto p1 = degree_profile(parse_poly("[x1,x2]", Q));
    CHECK(p1.max_indet_degree == 1);
    CHECK(p1.max_component_min_degree == 1);
    CHECK(p1.multilinear);
    CHECK(p1.homogeneous);

    auto p2 = degree_profile(engel_poly(Q, 3));
    CHECK(p2.max_indet_degree == 3);
    CHECK(p2.max_component_min_degree == 1);
    CHECK(!p2.multilinear);
    CHECK(p2.homogeneous);

    auto p3 = degree_profile(parse_poly("x1^2 + x1", Q));
    CHECK(p3.max_indet_degree == 2);
    CHECK(p3.max_component_min_degree == 2);  // max over components of the min degree
    CHECK(!p3.homogeneous);

    CHECK_THROWS_AS(degree_profile(FreePoly::zero(Q)), Error);
}

TEST_CASE("left-normed commutator rewriting identities") {
    // [x1,...,xi,...,xn] + [xi,[x1,...,x_{i-1}],x_{i+1},...,xn] = 0, n <= 5
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<FreePoly> plain;
        for (unsigned i = 1; i <= n; ++i) plain.push_back(X(i));
        FreePoly lhs = left_normed_bracket(plain);
        for (unsigned i = 2; i <= n; ++i) {
            std::vector<FreePoly> head;
            for (unsigned j = 1; j < i; ++j) head.push_back(X(j));
            std::vector<FreePoly> args{X(i), left_normed_bracket(head)};
            for (unsigned j = i + 1; j <= n; ++j) args.push_back(X(j));
            CHECK((lhs + left_normed_bracket(args)).is_zero());
        }
    }

    // [w x1, x2, ..., xn] = [w, x1x2, x3, ..., xn] + [x1, x2 w, x3, ..., xn], n <= 5
    for (unsigned n = 2; n <= 5; ++n) {
        FreePoly w = X(n + 1);
        std::vector<FreePoly> a{w * X(1)};
        std::vector<FreePoly> b{w, X(1) * X(2)};
        std::vector<FreePoly> c{X(1), X(2) * w};
        for (unsigned j = 2; j <= n; ++j) a.push_back(X(j));
        for (unsigned j = 3; j <= n; ++j) {
            b.push_back(X(j));
            c.push_back(X(j));
        }
        CHECK(left_normed_bracket(a) == left_normed_bracket(b) + left_normed_bracket(c));
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        FreePoly f(Q);
        for (int t = 0; t < 5; ++t) {
            Word w;
            std::size_t len = 1 + rng() % 3;
            for (std::size_t l = 0; l < len; ++l) w.push_back(1 + rng() % 3);
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 3);
            f.add_term(w, Q->from_mpq(mpq_class(num, den)));
        }
        if (f.is_zero()) continue;
        CHECK(parse_poly(to_string(f), Q) == f);
    }
    auto F4 = Field::parse("F4=F2[t]/(t^2+t+1)");
    FreePoly g = FreePoly::monomial(F4, {1, 2}, F4->generator() + F4->one()) +
                 FreePoly::monomial(F4, {2}, F4->generator());
    CHECK(parse_poly(to_string(g), F4) == g);
}
