#pragma once
// Finite fields GF(p^d).
//
// Elements are stored as their index in the canonical little-endian
// coefficient odometer: c0 + c1*p + ... + c_{d-1}*p^{d-1}. Zero is index 0
// and one is index 1 in every field.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hankel {

using Elem = std::uint32_t;

/// Largest supported order for an extension field (d >= 2). Extension
/// arithmetic is table driven.
inline constexpr std::uint32_t kMaxExtensionOrder = 1u << 20;

class Field {
public:
    /// GF(p) for a prime p < 2^31.
    static Field prime(std::uint32_t p);

    /// GF(p)[t]/(modulus). `modulus` holds d+1 little-endian coefficients and
    /// must be monic and irreducible. d == 1 with a monic linear modulus is
    /// accepted and yields GF(p).
    static Field extension(std::uint32_t p, unsigned d, std::vector<std::uint32_t> modulus);

    /// A prime field, or one of the built-in extension fields
    /// Q in {4, 8, 9, 16, 25, 27, 32, 49, 64}.
    static Field builtin(std::uint64_t order);

    /// Parses `Q` or `p^d:c0,c1,...,cd`.
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Little-endian modulus coefficients; `[0, 1]` for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;
    /// Text form accepted by `parse`.
    std::string spec_string() const;

    static constexpr Elem zero() noexcept { return 0; }
    static constexpr Elem one() noexcept { return 1; }
    bool contains(Elem a) const noexcept { return a < order(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// y[i] += a * x[i], through the active SIMD kernel set.
    void axpy(Elem a, std::span<const Elem> x, std::span<Elem> y) const;

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    /// All Q elements in canonical odometer order.
    std::vector<Elem> elements() const;

    /// Integer for d == 1, otherwise `c0+c1*t+c2*t^2+...` with all d terms.
    std::string format(Elem a) const;
    /// Inverse of `format`; also accepts sparse polynomial forms like `t`,
    /// `1+t` or `2*t^2`.
    Elem parse_element(std::string_view text) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

    struct Impl;
    const Impl& impl() const noexcept { return *impl_; }

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// An element tagged with its field; arithmetic between different fields is a
/// usage error.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coefficients(value_); }
    bool is_zero() const noexcept { return value_ == 0; }
    std::string to_string() const { return field_.format(value_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Elem value_;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_inv(const FieldElement& a);
std::vector<FieldElement> ff_elements(const Field& field);

bool is_prime(std::uint64_t n);

/// Rabin's test: `modulus` (little-endian, monic) is irreducible over GF(p).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> modulus);

/// Schoolbook product of two field elements as polynomials, reduced by the
/// modulus. Independent of the lookup tables; used to build them.
Elem polynomial_mul(const Field& field, Elem a, Elem b);

}  // namespace hankel
