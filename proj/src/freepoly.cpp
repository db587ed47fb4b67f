#include "pilab/freepoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pilab {

MultiDegree word_multidegree(const Word& w) {
    MultiDegree d;
    for (auto i : w) ++d[i];
    return d;
}

FreePoly FreePoly::indeterminate(const FieldPtr& field, std::uint32_t index) {
    if (index == 0) throw Error("indeterminate indices start at 1");
    return monomial(field, Word{index}, field->one());
}

FreePoly FreePoly::monomial(const FieldPtr& field, Word w, Scalar coeff) {
    FreePoly f(field);
    f.add_term(w, coeff);
    return f;
}

FreePoly FreePoly::unit(const FieldPtr& field) { return monomial(field, Word{}, field->one()); }

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint32_t FreePoly::max_index() const {
    std::uint32_t m = 0;
    for (const auto& [w, c] : terms_)
        for (auto i : w) m = std::max(m, i);
    return m;
}

std::vector<std::uint32_t> FreePoly::support_indices() const {
    std::set<std::uint32_t> s;
    for (const auto& [w, c] : terms_)
        for (auto i : w) s.insert(i);
    return {s.begin(), s.end()};
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    MultiDegree first = word_multidegree(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_multidegree(w) != first) return false;
    return true;
}

bool FreePoly::is_multilinear() const {
    if (terms_.empty()) return false;
    MultiDegree first = word_multidegree(terms_.begin()->first);
    for (const auto& [i, d] : first)
        if (d != 1) return false;
    for (const auto& [w, c] : terms_)
        if (word_multidegree(w) != first) return false;
    return true;
}

std::size_t FreePoly::total_degree() const {
    if (terms_.empty()) throw Error("total degree of the zero polynomial");
    std::size_t d = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != d) throw Error("polynomial is not degree-homogeneous");
    return d;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    if (!field_->same(*o.field_)) throw MismatchError("polynomials over different fields");
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    if (!field_->same(*o.field_)) throw MismatchError("polynomials over different fields");
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    if (!field_->same(*o.field_)) throw MismatchError("polynomials over different fields");
    FreePoly r(field_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

FreePoly FreePoly::operator-() const {
    FreePoly r(field_);
    for (const auto& [w, c] : terms_) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    FreePoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

bool FreePoly::operator==(const FreePoly& o) const {
    if (!field_->same(*o.field_)) throw MismatchError("polynomials over different fields");
    return terms_ == o.terms_;
}

FreePoly bracket(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly left_normed_bracket(const std::vector<FreePoly>& args) {
    if (args.empty()) throw Error("empty bracket");
    FreePoly acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = bracket(acc, args[i]);
    return acc;
}

FreePoly poly_arith(const FreePoly& a, const FreePoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
        case PolyOp::Bracket: return bracket(a, b);
    }
    throw Error("bad op");
}

FreePoly standard_poly(const FieldPtr& field, unsigned n, unsigned cap) {
    if (n < 1) throw Error("standard polynomial needs n >= 1");
    if (n > cap) throw CapError("standard polynomial degree " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    FreePoly f(field);
    Scalar one = field->one();
    Scalar minus_one = -one;
    // iterate permutations with sign tracked by inversion parity
    do {
        unsigned inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        f.add_term(Word(perm.begin(), perm.end()), inversions % 2 ? minus_one : one);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

FreePoly simple_commutator(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error("simple commutator needs length >= 1");
    std::vector<FreePoly> args;
    for (unsigned i = 1; i <= n; ++i) args.push_back(FreePoly::indeterminate(field, i));
    return left_normed_bracket(args);
}

FreePoly engel_poly(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error("Engel polynomial needs n >= 1");
    std::vector<FreePoly> args{FreePoly::indeterminate(field, 1)};
    for (unsigned i = 0; i < n; ++i) args.push_back(FreePoly::indeterminate(field, 2));
    return left_normed_bracket(args);
}

namespace {
FreePoly derived_commutator_at(const FieldPtr& field, unsigned n, std::uint32_t base) {
    if (n == 1)
        return bracket(FreePoly::indeterminate(field, base), FreePoly::indeterminate(field, base + 1));
    std::uint32_t half = 1u << (n - 1);
    return bracket(derived_commutator_at(field, n - 1, base),
                   derived_commutator_at(field, n - 1, base + half));
}
}  // namespace

FreePoly derived_commutator(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error("derived commutator needs n >= 1");
    if (n > 4) throw CapError("derived commutator g_n capped at n <= 4");
    return derived_commutator_at(field, n, 1);
}

FreePoly product_of_simples(const FieldPtr& field, const std::vector<unsigned>& lengths) {
    if (lengths.empty()) throw Error("product of simples needs at least one factor");
    FreePoly acc = FreePoly::unit(field);
    bool first = true;
    std::uint32_t next = 1;
    for (unsigned len : lengths) {
        if (len < 1) throw Error("simple commutator length must be >= 1");
        std::vector<FreePoly> args;
        for (unsigned i = 0; i < len; ++i) args.push_back(FreePoly::indeterminate(field, next++));
        FreePoly h = left_normed_bracket(args);
        acc = first ? h : acc * h;
        first = false;
    }
    return acc;
}

std::vector<std::pair<MultiDegree, FreePoly>> homogeneous_decompose(const FreePoly& f) {
    std::map<MultiDegree, FreePoly> buckets;
    for (const auto& [w, c] : f.terms()) {
        MultiDegree d = word_multidegree(w);
        auto it = buckets.find(d);
        if (it == buckets.end()) it = buckets.emplace(d, FreePoly(f.field())).first;
        it->second.add_term(w, c);
    }
    return {buckets.begin(), buckets.end()};
}

namespace {

// component of f of degree exactly deg in indeterminate `index`
FreePoly degree_component(const FreePoly& f, std::uint32_t index, std::uint32_t deg) {
    FreePoly out(f.field());
    for (const auto& [w, c] : f.terms()) {
        std::uint32_t d = 0;
        for (auto i : w)
            if (i == index) ++d;
        if (d == deg) out.add_term(w, c);
    }
    return out;
}

// canonical renaming: indices relabelled 1..k in order of first appearance in
// the canonical term order; used only to deduplicate polarizations
FreePoly canonical_rename(const FreePoly& f) {
    std::map<std::uint32_t, std::uint32_t> rename;
    std::uint32_t next = 1;
    for (const auto& [w, c] : f.terms())
        for (auto i : w)
            if (!rename.count(i)) rename[i] = next++;
    FreePoly out(f.field());
    for (const auto& [w, c] : f.terms()) {
        Word v;
        v.reserve(w.size());
        for (auto i : w) v.push_back(rename.at(i));
        out.add_term(v, c);
    }
    return out;
}

}  // namespace

std::vector<FreePoly> multilinearize(const FreePoly& f, unsigned degree_cap) {
    if (f.is_zero()) return {};
    if (!f.is_homogeneous()) throw Error("multilinearize requires a homogeneous polynomial");
    DegreeProfile prof = degree_profile(f);
    if (prof.max_indet_degree > degree_cap)
        throw CapError("indeterminate degree " + std::to_string(prof.max_indet_degree) +
                       " exceeds polarization cap " + std::to_string(degree_cap));

    std::vector<FreePoly> results;
    std::vector<FreePoly> pending{f};
    std::set<std::string> seen;  // canonical-renamed text of emitted/queued polys
    auto key = [](const FreePoly& g) { return to_string(canonical_rename(g)); };
    seen.insert(key(f));

    while (!pending.empty()) {
        FreePoly g = std::move(pending.back());
        pending.pop_back();
        // find an indeterminate with degree >= 2
        std::uint32_t split = 0;
        for (const auto& [idx, d] : word_multidegree(g.terms().begin()->first))
            if (d >= 2) {
                split = idx;
                break;
            }
        if (split == 0) {
            results.push_back(std::move(g));
            continue;
        }
        // substitute x_split -> x_split + x_fresh and keep the cross components
        std::uint32_t fresh = g.max_index() + 1;
        std::map<std::uint32_t, FreePoly> assign;
        for (auto idx : g.support_indices()) assign.emplace(idx, FreePoly::indeterminate(g.field(), idx));
        assign.at(split) = FreePoly::indeterminate(g.field(), split) +
                           FreePoly::indeterminate(g.field(), fresh);
        FreePoly expanded = substitute(g, assign);
        std::uint32_t d = 0;
        for (const auto& [idx, dd] : word_multidegree(g.terms().begin()->first))
            if (idx == split) d = dd;
        for (std::uint32_t k = 1; k + 1 <= d; ++k) {
            FreePoly cross = degree_component(expanded, fresh, k);
            if (cross.is_zero()) continue;
            if (seen.insert(key(cross)).second) pending.push_back(std::move(cross));
        }
    }
    // canonical output order
    std::sort(results.begin(), results.end(),
              [](const FreePoly& a, const FreePoly& b) { return to_string(a) < to_string(b); });
    return results;
}

FreePoly substitute(const FreePoly& f, const std::map<std::uint32_t, FreePoly>& assignment) {
    FreePoly out(f.field());
    for (const auto& [w, c] : f.terms()) {
        FreePoly prod = FreePoly::monomial(f.field(), Word{}, c);
        for (auto i : w) {
            auto it = assignment.find(i);
            if (it == assignment.end())
                throw Error("substitute: no assignment for x" + std::to_string(i));
            prod = prod * it->second;
        }
        out = out + prod;
    }
    return out;
}

DegreeProfile degree_profile(const FreePoly& f) {
    if (f.is_zero()) throw Error("degree profile of the zero polynomial");
    DegreeProfile p;
    p.homogeneous = f.is_homogeneous();
    p.multilinear = f.is_multilinear();
    for (const auto& [deg, comp] : homogeneous_decompose(f)) {
        std::size_t comp_min = 0;
        bool first = true;
        for (const auto& [idx, d] : deg) {
            p.max_indet_degree = std::max<std::size_t>(p.max_indet_degree, d);
            if (first || d < comp_min) comp_min = d;
            first = false;
        }
        if (!first) p.max_component_min_degree = std::max(p.max_component_min_degree, comp_min);
    }
    return p;
}

std::string to_string(const FreePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        Scalar coeff = c;
        std::string neg_str = (-coeff).to_string();
        bool negated = false;
        // print `- term` when -c has a shorter (sign-free) canonical form
        if (!first && neg_str.size() < coeff.to_string().size() && coeff.to_string()[0] == '-') {
            negated = true;
            coeff = -coeff;
        }
        if (first)
            first = false;
        else
            out += negated ? " - " : " + ";
        std::string cs = coeff.to_string();
        if (w.empty()) {
            out += cs;  // unit monomial; only reachable in unital contexts
            continue;
        }
        if (cs != "1") out += cs + " ";
        for (auto i : w) out += "x" + std::to_string(i);
    }
    return out;
}

}  // namespace pilab
