#include "pilab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pilab {
namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint64_t>;  // coefficients low to high, over F_p

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f modulo monic g
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
    poly_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead != 0)
            for (std::size_t i = 0; i <= dg; ++i)
                f[shift + i] = mod_sub(f[shift + i], mod_mul(lead, g[i], p), p);
        f.pop_back();
        poly_trim(f);
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_add(r[i + j], mod_mul(a[i], b[j], p), p);
    }
    return r;
}

Poly poly_add(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_add(a[i], b[i], p);
    poly_trim(a);
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_sub(a[i], b[i], p);
    poly_trim(a);
    return a;
}

// extended Euclid: inverse of f modulo the field modulus m (f nonzero, deg f < deg m)
Poly poly_modinv(Poly f, Poly m, std::uint64_t p) {
    // invariants: r0 = s0*f mod m, r1 = s1*f mod m
    Poly r0 = std::move(m), r1 = std::move(f);
    Poly s0 = {}, s1 = {1};
    poly_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        std::uint64_t lead_inv = mod_inv(r1.back(), p);
        while (rem.size() >= r1.size()) {
            std::size_t shift = rem.size() - r1.size();
            std::uint64_t c = mod_mul(rem.back(), lead_inv, p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_sub(rem[shift + i], mod_mul(c, r1[i], p), p);
            poly_trim(rem);
            if (rem.empty()) break;
        }
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error("element not invertible modulo field modulus");
    std::uint64_t c = mod_inv(r0[0], p);
    for (auto& x : s0) x = mod_mul(x, c, p);
    return s0;
}

std::string fp_poly_to_string(const Poly& f, const std::string& var) {
    std::string out;
    for (std::size_t d = f.size(); d-- > 0;) {
        if (f[d] == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += std::to_string(f[d]);
        } else {
            if (f[d] != 1) out += std::to_string(f[d]) + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

// enumerate polynomials over F_p of degree < deg by counting
Poly nth_poly(std::uint64_t n, std::size_t len, std::uint64_t p) {
    Poly f(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        f[i] = n % p;
        n /= p;
    }
    return f;
}

}  // namespace

FieldPtr Field::rationals() {
    return FieldPtr(new Field(Kind::Rationals, 0, {}));
}

FieldPtr Field::prime(std::uint64_t p) {
    if (p > kMaxPrime) throw Error("prime too large: " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error("not a prime: " + std::to_string(p));
    return FieldPtr(new Field(Kind::Prime, p, {}));
}

FieldPtr Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (p > kMaxPrime) throw Error("prime too large: " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error("not a prime: " + std::to_string(p));
    for (auto& c : modulus) c %= p;
    poly_trim(modulus);
    if (modulus.size() < 3) throw Error("extension modulus must have degree >= 2");
    if (modulus.back() != 1) throw Error("extension modulus must be monic");
    const std::size_t k = modulus.size() - 1;
    // trial division by every lower-degree monic polynomial
    for (std::size_t d = 1; d <= k / 2; ++d) {
        double count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(p);
        if (count > static_cast<double>(1u << 22))
            throw CapError("modulus irreducibility check too large for trial division");
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t n = 0; n < total; ++n) {
            Poly g = nth_poly(n, d, p);
            g.push_back(1);  // monic of degree d
            Poly rem = poly_rem(modulus, g, p);
            if (rem.empty())
                throw Error("reducible modulus: factor (" + fp_poly_to_string(g, "t") + ")");
        }
    }
    return FieldPtr(new Field(Kind::Extension, p, std::move(modulus)));
}

mpz_class Field::cardinality() const {
    if (!finite()) throw Error("rationals are infinite");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(extension_degree()));
    return q;
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::Extension: {
            mpz_class q = cardinality();
            return "F" + q.get_str() + "=F" + std::to_string(p_) + "[t]/(" +
                   fp_poly_to_string(modulus_, "t") + ")";
        }
    }
    return "?";
}

bool Field::same(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && modulus_ == other.modulus_;
}

Scalar Field::zero() const {
    switch (kind_) {
        case Kind::Rationals: return Scalar(shared_from_this(), mpq_class(0));
        case Kind::Prime: return Scalar(shared_from_this(), std::uint64_t(0));
        case Kind::Extension: return Scalar(shared_from_this(), std::vector<std::uint64_t>(extension_degree(), 0));
    }
    throw Error("bad field kind");
}

Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long n) const { return from_mpz(mpz_class(n)); }

Scalar Field::from_mpz(const mpz_class& n) const {
    switch (kind_) {
        case Kind::Rationals: return Scalar(shared_from_this(), mpq_class(n));
        case Kind::Prime: {
            mpz_class r = n % static_cast<unsigned long>(p_);
            if (r < 0) r += static_cast<unsigned long>(p_);
            return Scalar(shared_from_this(), static_cast<std::uint64_t>(r.get_ui()));
        }
        case Kind::Extension: {
            mpz_class r = n % static_cast<unsigned long>(p_);
            if (r < 0) r += static_cast<unsigned long>(p_);
            std::vector<std::uint64_t> c(extension_degree(), 0);
            c[0] = static_cast<std::uint64_t>(r.get_ui());
            return Scalar(shared_from_this(), std::move(c));
        }
    }
    throw Error("bad field kind");
}

Scalar Field::from_mpq(const mpq_class& q) const {
    if (kind_ == Kind::Rationals) {
        mpq_class c(q);
        c.canonicalize();
        return Scalar(shared_from_this(), std::move(c));
    }
    // interpret a/b as a * b^{-1} in the finite field
    Scalar num = from_mpz(mpz_class(q.get_num()));
    Scalar den = from_mpz(mpz_class(q.get_den()));
    return num / den;
}

Scalar Field::residue(std::uint64_t r) const {
    if (kind_ != Kind::Prime) throw Error("residue() requires a prime field");
    return Scalar(shared_from_this(), r % p_);
}

Scalar Field::from_coeffs(std::vector<std::uint64_t> c) const {
    if (kind_ != Kind::Extension) throw Error("from_coeffs() requires an extension field");
    c.resize(extension_degree(), 0);
    for (auto& x : c) x %= p_;
    return Scalar(shared_from_this(), std::move(c));
}

Scalar Field::generator() const {
    if (kind_ != Kind::Extension) throw Error("generator() requires an extension field");
    std::vector<std::uint64_t> c(extension_degree(), 0);
    c[1] = 1;
    return Scalar(shared_from_this(), std::move(c));
}

std::vector<Scalar> Field::elements(std::uint64_t cap) const {
    if (!finite()) throw Error("cannot enumerate the rationals");
    mpz_class q = cardinality();
    if (q > cap) throw CapError("field enumeration exceeds cap: |K| = " + q.get_str());
    std::uint64_t n = static_cast<std::uint64_t>(q.get_ui());
    std::vector<Scalar> out;
    out.reserve(n);
    if (kind_ == Kind::Prime) {
        for (std::uint64_t r = 0; r < n; ++r) out.push_back(Scalar(shared_from_this(), r));
    } else {
        const std::size_t k = extension_degree();
        for (std::uint64_t i = 0; i < n; ++i)
            out.push_back(Scalar(shared_from_this(), nth_poly(i, k, p_)));
    }
    return out;
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return sgn(std::get<mpq_class>(rep_)) == 0;
        case Field::Kind::Prime: return std::get<std::uint64_t>(rep_) == 0;
        case Field::Kind::Extension: {
            for (auto c : std::get<std::vector<std::uint64_t>>(rep_))
                if (c) return false;
            return true;
        }
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_) == 1;
        case Field::Kind::Prime: return std::get<std::uint64_t>(rep_) == 1;
        case Field::Kind::Extension: {
            const auto& c = std::get<std::vector<std::uint64_t>>(rep_);
            if (c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i]) return false;
            return true;
        }
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            return Scalar(field_, mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
        case Field::Kind::Prime:
            return Scalar(field_, mod_add(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_),
                                          field_->characteristic()));
        case Field::Kind::Extension: {
            auto c = std::get<std::vector<std::uint64_t>>(rep_);
            const auto& d = std::get<std::vector<std::uint64_t>>(o.rep_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_add(c[i], d[i], field_->characteristic());
            return Scalar(field_, std::move(c));
        }
    }
    throw Error("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            return Scalar(field_, mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
        case Field::Kind::Prime:
            return Scalar(field_, mod_sub(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_),
                                          field_->characteristic()));
        case Field::Kind::Extension: {
            auto c = std::get<std::vector<std::uint64_t>>(rep_);
            const auto& d = std::get<std::vector<std::uint64_t>>(o.rep_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_sub(c[i], d[i], field_->characteristic());
            return Scalar(field_, std::move(c));
        }
    }
    throw Error("bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            return Scalar(field_, mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
        case Field::Kind::Prime:
            return Scalar(field_, mod_mul(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_),
                                          field_->characteristic()));
        case Field::Kind::Extension: {
            const std::uint64_t p = field_->characteristic();
            Poly prod = poly_mul(std::get<std::vector<std::uint64_t>>(rep_),
                                 std::get<std::vector<std::uint64_t>>(o.rep_), p);
            Poly rem = poly_rem(std::move(prod), field_->modulus(), p);
            rem.resize(field_->extension_degree(), 0);
            return Scalar(field_, std::move(rem));
        }
    }
    throw Error("bad field kind");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero in " + field_->name());
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            return Scalar(field_, mpq_class(1 / std::get<mpq_class>(rep_)));
        case Field::Kind::Prime:
            return Scalar(field_, mod_inv(std::get<std::uint64_t>(rep_), field_->characteristic()));
        case Field::Kind::Extension: {
            Poly inv = poly_modinv(std::get<std::vector<std::uint64_t>>(rep_), field_->modulus(),
                                   field_->characteristic());
            inv.resize(field_->extension_degree(), 0);
            return Scalar(field_, std::move(inv));
        }
    }
    throw Error("bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(*this, o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const { return field_->zero() - *this; }

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc = field_->one();
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(*this, o);
    return rep_ == o.rep_;
}

bool Scalar::less(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_) < std::get<mpq_class>(o.rep_);
        case Field::Kind::Prime: return std::get<std::uint64_t>(rep_) < std::get<std::uint64_t>(o.rep_);
        case Field::Kind::Extension:
            return std::get<std::vector<std::uint64_t>>(rep_) < std::get<std::vector<std::uint64_t>>(o.rep_);
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_).get_str();
        case Field::Kind::Prime: return std::to_string(std::get<std::uint64_t>(rep_));
        case Field::Kind::Extension: {
            const auto& c = std::get<std::vector<std::uint64_t>>(rep_);
            std::string s = fp_poly_to_string(c, "a");
            int terms = 0;
            for (auto x : c)
                if (x) ++terms;
            // bare: `0`, a plain integer, or exactly `a`
            bool bare = terms == 0 || (terms == 1 && c[0] != 0) || s == "a";
            return bare ? s : "(" + s + ")";
        }
    }
    return "?";
}

std::optional<std::uint64_t> multiplicative_order(const Scalar& a) {
    if (a.is_zero()) throw Error("multiplicative order of zero");
    const Field& F = *a.field();
    if (!F.finite()) {
        if (a.is_one()) return 1;
        if ((-a).is_one()) return 2;
        return std::nullopt;
    }
    mpz_class q = F.cardinality();
    if (q > (mpz_class(1) << 32)) throw CapError("field too large for order computation");
    std::uint64_t group = static_cast<std::uint64_t>(q.get_ui()) - 1;
    // reduce the exponent by each prime factor of |K*|
    std::uint64_t e = group, n = group;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        while (e % d == 0 && a.pow(mpz_class(static_cast<unsigned long>(e / d))).is_one()) e /= d;
    }
    if (n > 1)
        while (e % n == 0 && a.pow(mpz_class(static_cast<unsigned long>(e / n))).is_one()) e /= n;
    return e;
}

namespace {

struct TextCursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    std::uint64_t read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer", i);
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (1ull << 62)) throw ParseError("integer too large", i);
            ++i;
        }
        return v;
    }
};

// parses `c`, `t^k`, `c*t^k`, `ct^k` summands of a modulus polynomial over F_p
Poly parse_fp_poly(TextCursor& cur, std::uint64_t p, char var) {
    Poly f;
    bool first = true;
    for (;;) {
        cur.skip_ws();
        bool neg = false;
        if (cur.eat('-')) neg = true;
        else if (!first) {
            if (!cur.eat('+')) break;
        }
        first = false;
        std::uint64_t coeff = 1;
        std::size_t deg = 0;
        bool have_any = false;
        cur.skip_ws();
        if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            coeff = cur.read_uint() % p;
            have_any = true;
            cur.eat('*');
        }
        cur.skip_ws();
        if (cur.i < cur.s.size() && cur.s[cur.i] == var) {
            ++cur.i;
            deg = 1;
            have_any = true;
            if (cur.eat('^')) deg = static_cast<std::size_t>(cur.read_uint());
        }
        if (!have_any) throw ParseError("expected polynomial term", cur.i);
        if (deg > 64) throw ParseError("degree too large", cur.i);
        if (f.size() < deg + 1) f.resize(deg + 1, 0);
        std::uint64_t c = coeff % p;
        if (neg) c = (p - c) % p;
        f[deg] = mod_add(f[deg], c, p);
    }
    poly_trim(f);
    return f;
}

}  // namespace

FieldPtr Field::parse(std::string_view literal) {
    TextCursor cur{literal};
    cur.skip_ws();
    if (cur.eat('Q')) {
        if (!cur.done()) throw ParseError("trailing characters after Q", cur.i);
        return rationals();
    }
    if (!cur.eat('F')) throw ParseError("field literal must be Q or F...", cur.i);
    std::uint64_t q = cur.read_uint();
    if (cur.done()) return prime(q);
    cur.expect('=');
    cur.expect('F');
    std::uint64_t p = cur.read_uint();
    cur.expect('[');
    cur.expect('t');
    cur.expect(']');
    cur.expect('/');
    cur.expect('(');
    Poly modulus = parse_fp_poly(cur, p, 't');
    cur.expect(')');
    if (!cur.done()) throw ParseError("trailing characters in field literal", cur.i);
    FieldPtr F = extension(p, modulus);
    if (F->cardinality() != static_cast<unsigned long>(q))
        throw Error("field literal cardinality mismatch: F" + std::to_string(q) + " vs p^k = " +
                    F->cardinality().get_str());
    return F;
}

Scalar Field::parse_scalar(std::string_view text) const {
    TextCursor cur{text};
    cur.skip_ws();
    if (kind_ == Kind::Extension) {
        // polynomial in the generator, written `a` (or `t`): e.g. `a+1`, `2a^2+a`
        bool uses_gen = text.find('a') != std::string_view::npos || text.find('t') != std::string_view::npos;
        if (uses_gen) {
            char var = text.find('a') != std::string_view::npos ? 'a' : 't';
            bool wrapped = cur.eat('(');
            Poly f = parse_fp_poly(cur, p_, var);
            if (wrapped) cur.expect(')');
            if (!cur.done()) throw ParseError("trailing characters in scalar literal", cur.i);
            if (f.size() > extension_degree())
                f = poly_rem(std::move(f), modulus_, p_);
            return from_coeffs(std::move(f));
        }
    }
    bool neg = cur.eat('-');
    std::uint64_t num = cur.read_uint();
    mpz_class n(static_cast<unsigned long>(num));
    if (neg) n = -n;
    if (cur.eat('/')) {
        std::uint64_t den = cur.read_uint();
        if (!cur.done()) throw ParseError("trailing characters in scalar literal", cur.i);
        if (den == 0) throw Error("zero denominator in scalar literal");
        return from_mpq(mpq_class(n, mpz_class(static_cast<unsigned long>(den))));
    }
    if (!cur.done()) throw ParseError("trailing characters in scalar literal", cur.i);
    return from_mpz(n);
}

}  // namespace pilab
