#ifndef PILAB_FREEPOLY_HPP
#define PILAB_FREEPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pilab/scalar.hpp"

namespace pilab {

/// A monomial of the free algebra: the sequence of indeterminate indices.
/// The empty word is the unit monomial and is only admitted in unital mode.
using Word = std::vector<std::uint32_t>;

/// Canonical monomial order: by total degree, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Per-indeterminate degree vector of a monomial or homogeneous component.
using MultiDegree = std::map<std::uint32_t, std::uint32_t>;

MultiDegree word_multidegree(const Word& w);

/// An element of the free associative algebra K<x1, x2, ...>, stored as a
/// finitely supported map from words to nonzero coefficients.
class FreePoly {
public:
    explicit FreePoly(FieldPtr field) : field_(std::move(field)) {}

    static FreePoly zero(FieldPtr field) { return FreePoly(std::move(field)); }
    static FreePoly indeterminate(const FieldPtr& field, std::uint32_t index);
    static FreePoly monomial(const FieldPtr& field, Word w, Scalar coeff);
    static FreePoly unit(const FieldPtr& field);  // empty word

    const FieldPtr& field() const { return field_; }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_unit_term() const { return terms_.count(Word{}) > 0; }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest indeterminate index appearing (0 for constants / zero).
    std::uint32_t max_index() const;
    /// All indeterminate indices appearing, ascending.
    std::vector<std::uint32_t> support_indices() const;

    bool is_homogeneous() const;
    bool is_multilinear() const;
    /// Common total degree; throws unless all words share one.
    std::size_t total_degree() const;

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly scaled(const Scalar& c) const;
    bool operator==(const FreePoly& o) const;
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    void add_term(const Word& w, const Scalar& c);

private:
    FieldPtr field_;
    std::map<Word, Scalar, WordLess> terms_;
};

/// ab - ba.
FreePoly bracket(const FreePoly& a, const FreePoly& b);
/// Left-normed commutator [[...[a1,a2],...],ak]; requires >= 1 argument.
FreePoly left_normed_bracket(const std::vector<FreePoly>& args);

enum class PolyOp { Add, Sub, Mul, Bracket };
FreePoly poly_arith(const FreePoly& a, const FreePoly& b, PolyOp op);

// --- built-in families (fresh consecutive indeterminates x1..xn) ---

/// Alternating sum over all n! monomial orderings.
FreePoly standard_poly(const FieldPtr& field, unsigned n, unsigned cap = 8);
/// Left-normed [x1,x2,...,xn].
FreePoly simple_commutator(const FieldPtr& field, unsigned n);
/// [x1, x2, ..., x2] with n copies of x2.
FreePoly engel_poly(const FieldPtr& field, unsigned n);
/// g1 = [x1,x2], g_n = [g_{n-1}(x1..), g_{n-1}(x..)] on 2^n indeterminates.
FreePoly derived_commutator(const FieldPtr& field, unsigned n);
/// h1 h2 ... hm, each hj a simple commutator of the given length, on fresh
/// consecutive indeterminates.
FreePoly product_of_simples(const FieldPtr& field, const std::vector<unsigned>& lengths);

// --- structural operations ---

/// Splits into homogeneous components; components sum to the input and have
/// pairwise distinct multidegrees.
std::vector<std::pair<MultiDegree, FreePoly>> homogeneous_decompose(const FreePoly& f);

/// Full polarizations of a homogeneous polynomial: every multilinear
/// consequence of the same total degree reachable by iterated
/// x -> x' + x'' substitution and cross-term extraction. Fresh indices
/// continue after the maximum index in use.
std::vector<FreePoly> multilinearize(const FreePoly& f, unsigned degree_cap = 6);

/// Image under the endomorphism sending x_i to assignment.at(i); every index
/// in the support must be assigned.
FreePoly substitute(const FreePoly& f, const std::map<std::uint32_t, FreePoly>& assignment);

struct DegreeProfile {
    std::size_t max_indet_degree = 0;        // m
    std::size_t max_component_min_degree = 0;  // r = max over components of min degree
    bool multilinear = false;
    bool homogeneous = false;
};
DegreeProfile degree_profile(const FreePoly& f);  // throws on zero

// --- text form ---

/// Parses the polynomial grammar:
///   expr   := term (('+'|'-') term)*
///   term   := scalar? factor+
///   factor := indeterminate | '(' expr ')' | '[' expr (',' expr)+ ']'
///           | macro | factor '^' int
///   macro  := 's(' int ')' | 'engel(' int ')' | 'simple(' int ')' | 'g(' int ')'
/// Scalars are integers, fractions, or extension-generator literals like `a`.
/// `^0` is only legal in unital mode, where it denotes the empty word.
FreePoly parse_poly(std::string_view text, const FieldPtr& field, bool unital = false);

/// Canonical rendering; parse(to_string(f)) == f.
std::string to_string(const FreePoly& f);

}  // namespace pilab

#endif
