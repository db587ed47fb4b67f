#ifndef PILAB_SCALAR_HPP
#define PILAB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pilab/error.hpp"

namespace pilab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class Scalar;

/// An exact base field: Q, F_p, or F_{p^k} = F_p[t]/(modulus).
///
/// Extension moduli are monic and certified irreducible at construction by
/// trial division against every monic polynomial of lower degree.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, Prime, Extension };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    /// modulus = c0 + c1 t + ... + c_k t^k with c_k = 1, k >= 2; coefficients mod p.
    static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// Parses `Q`, `F5`, `F4=F2[t]/(t^2+t+1)`.
    static FieldPtr parse(std::string_view literal);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    bool finite() const { return kind_ != Kind::Rationals; }
    mpz_class cardinality() const;  // throws on Q
    std::size_t extension_degree() const { return kind_ == Kind::Extension ? modulus_.size() - 1 : 1; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::string name() const;

    bool same(const Field& other) const;

    // element factories
    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(long n) const;
    Scalar from_mpz(const mpz_class& n) const;
    Scalar from_mpq(const mpq_class& q) const;  // rationals only
    Scalar residue(std::uint64_t r) const;      // prime field
    Scalar from_coeffs(std::vector<std::uint64_t> c) const;  // extension field
    Scalar generator() const;                   // class of t in F_{p^k}
    /// Parses a scalar literal: `-3`, `1/2`, `a`, `t`, `a+1`, `2a^2+a+1`.
    Scalar parse_scalar(std::string_view text) const;

    /// All field elements in a fixed order (finite fields only; throws CapError
    /// when the cardinality exceeds `cap`).
    std::vector<Scalar> elements(std::uint64_t cap = 1u << 20) const;

private:
    Field(Kind k, std::uint64_t p, std::vector<std::uint64_t> modulus)
        : kind_(k), p_(p), modulus_(std::move(modulus)) {}

    Kind kind_;
    std::uint64_t p_;                      // 0 for Q
    std::vector<std::uint64_t> modulus_;   // empty unless extension

    friend class Scalar;
};

/// An exact field element. Always stored in canonical form (lowest terms with
/// positive denominator / least residue / coefficient vector of length k), so
/// equality is structural.
class Scalar {
public:
    Scalar() = default;  // invalid; assign before use

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(const mpz_class& e) const;  // e >= 0, or e < 0 with invertible base

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order within one field (canonical representations compared);
    /// used for set containers, not for any algebraic meaning.
    bool less(const Scalar& o) const;

    std::string to_string() const;

    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    std::uint64_t residue_value() const { return std::get<std::uint64_t>(rep_); }
    const std::vector<std::uint64_t>& coeffs() const { return std::get<std::vector<std::uint64_t>>(rep_); }

private:
    using Rep = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>>;
    Scalar(FieldPtr f, Rep rep) : field_(std::move(f)), rep_(std::move(rep)) {}

    FieldPtr field_;
    Rep rep_;

    friend class Field;
};

/// Least e >= 1 with a^e = 1, or nullopt when a is not a root of unity
/// (only possible over Q). Throws on a = 0.
std::optional<std::uint64_t> multiplicative_order(const Scalar& a);

inline void require_same_field(const Scalar& a, const Scalar& b) {
    if (!a.field()->same(*b.field()))
        throw MismatchError("scalars belong to different fields: " + a.field()->name() + " vs " +
                            b.field()->name());
}

}  // namespace pilab

#endif
