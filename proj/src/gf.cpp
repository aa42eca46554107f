#include "hankel/gf.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"

namespace hankel {

struct Field::Impl {
    std::uint32_t p = 2;
    unsigned d = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    bool prime_field = true;
    bool char2 = false;

    // Extension fields only.
    std::vector<std::uint32_t> exp;        // 2*(q-1) entries
    std::vector<std::uint32_t> log;        // q entries, log[0] == 0
    std::vector<std::uint32_t> neg_table;  // odd characteristic
    std::vector<std::uint32_t> add_table;  // odd characteristic, q <= kAddTableLimit
    std::vector<std::uint32_t> place;      // p^i

    static constexpr std::uint32_t kAddTableLimit = 256;

    std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t out = 0;
        for (unsigned i = 0; i < d; ++i) {
            const std::uint32_t s = (a % p + b % p) % p;
            out += s * place[i];
            a /= p;
            b /= p;
        }
        return out;
    }
};

namespace {

struct BuiltinModulus {
    std::uint32_t order;
    std::uint32_t p;
    unsigned d;
    std::array<std::uint32_t, 7> coeffs;  // little-endian, d+1 used
};

// Conway polynomials.
constexpr std::array<BuiltinModulus, 9> kBuiltins{{
    {4, 2, 2, {1, 1, 1}},
    {8, 2, 3, {1, 1, 0, 1}},
    {9, 3, 2, {2, 2, 1}},
    {16, 2, 4, {1, 1, 0, 0, 1}},
    {25, 5, 2, {2, 4, 1}},
    {27, 3, 3, {1, 2, 0, 1}},
    {32, 2, 5, {1, 0, 1, 0, 0, 1}},
    {49, 7, 2, {3, 6, 1}},
    {64, 2, 6, {1, 1, 0, 1, 1, 0, 1}},
}};

const BuiltinModulus* find_builtin(std::uint64_t order) {
    for (const auto& b : kBuiltins) {
        if (b.order == order) {
            return &b;
        }
    }
    return nullptr;
}

std::vector<std::uint32_t> builtin_coeffs(const BuiltinModulus& b) {
    return {b.coeffs.begin(), b.coeffs.begin() + b.d + 1};
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t old_r = static_cast<std::int64_t>(a);
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_s = std::exchange(s, old_s - quot * s);
    }
    const auto mod = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((old_s % mod) + mod) % mod);
}

// Dense polynomials over GF(p), little-endian, trimmed of leading zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = mod_inverse(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1u) {
            result = poly_mulmod(result, base, m, p);
        }
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) {
                n /= f;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint32_t reduced_product(const Field::Impl& f, std::uint32_t a, std::uint32_t b) {
    if (f.prime_field) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % f.p);
    }
    Poly pa(f.d), pb(f.d);
    for (unsigned i = 0; i < f.d; ++i) {
        pa[i] = a % f.p;
        pb[i] = b % f.p;
        a /= f.p;
        b /= f.p;
    }
    const Poly m(f.modulus.begin(), f.modulus.end());
    Poly r = poly_mulmod(pa, pb, m, f.p);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += static_cast<std::uint32_t>(r[i]) * f.place[i];
    }
    return out;
}

void build_tables(Field::Impl& f) {
    const std::uint32_t q = f.q;
    const std::uint32_t group = q - 1;
    f.exp.assign(2 * static_cast<std::size_t>(group), 0);
    f.log.assign(q, 0);
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t k = 0;
        bool primitive = true;
        for (; k < group; ++k) {
            f.exp[k] = x;
            x = reduced_product(f, x, g);
            if (x == 1 && k + 1 < group) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            break;
        }
    }
    for (std::uint32_t k = 0; k < group; ++k) {
        f.exp[group + k] = f.exp[k];
        f.log[f.exp[k]] = k;
    }
    if (!f.char2) {
        f.neg_table.resize(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t out = 0;
            std::uint32_t rest = a;
            for (unsigned i = 0; i < f.d; ++i) {
                const std::uint32_t c = rest % f.p;
                rest /= f.p;
                out += ((f.p - c) % f.p) * f.place[i];
            }
            f.neg_table[a] = out;
        }
        if (q <= Field::Impl::kAddTableLimit) {
            f.add_table.resize(static_cast<std::size_t>(q) * q);
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t b = 0; b < q; ++b) {
                    f.add_table[static_cast<std::size_t>(a) * q + b] = f.digit_add(a, b);
                }
            }
        }
    }
}

std::uint32_t parse_u32(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || value > 0xffffffffull) {
        throw UsageError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    }
    return static_cast<std::uint32_t>(value);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> modulus) {
    if (modulus.size() < 2 || modulus.back() % p == 0) {
        return false;
    }
    const unsigned d = static_cast<unsigned>(modulus.size() - 1);
    if (d == 1) {
        return true;
    }
    Poly m(modulus.begin(), modulus.end());
    for (auto& c : m) {
        c %= p;
    }
    const Poly x{0, 1};
    auto frobenius_power = [&](unsigned i) {
        Poly r = x;
        for (unsigned k = 0; k < i; ++k) {
            r = poly_powmod(r, p, m, p);
        }
        return r;
    };
    auto minus_x = [&](Poly r) {
        r.resize(std::max<std::size_t>(r.size(), 2), 0);
        r[1] = (r[1] + p - 1) % p;
        trim(r);
        return r;
    };
    if (!minus_x(frobenius_power(d)).empty()) {
        return false;
    }
    for (unsigned r : prime_divisors(d)) {
        const Poly g = poly_gcd(m, minus_x(frobenius_power(d / r)), p);
        if (g.size() != 1) {
            return false;
        }
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw UsageError("field characteristic must be a prime below 2^31, got " +
                         std::to_string(p));
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->d = 1;
    impl->q = p;
    impl->modulus = {0, 1};
    impl->prime_field = true;
    impl->place = {1};
    return Field(std::move(impl));
}

Field Field::extension(std::uint32_t p, unsigned d, std::vector<std::uint32_t> modulus) {
    if (d == 0) {
        throw UsageError("extension degree must be at least 1");
    }
    if (p >= (1u << 31) || !is_prime(p)) {
        throw UsageError("field characteristic must be a prime below 2^31, got " +
                         std::to_string(p));
    }
    if (modulus.size() != d + 1) {
        throw UsageError("modulus must have exactly d+1 = " + std::to_string(d + 1) +
                         " coefficients");
    }
    for (auto c : modulus) {
        if (c >= p) {
            throw UsageError("modulus coefficient " + std::to_string(c) + " is not below p");
        }
    }
    if (modulus.back() != 1) {
        throw UsageError("modulus must be monic");
    }
    if (d == 1) {
        return prime(p);
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d; ++i) {
        q *= p;
        if (q > kMaxExtensionOrder) {
            throw UsageError("extension fields are limited to order <= " +
                             std::to_string(kMaxExtensionOrder));
        }
    }
    if (!is_irreducible(p, modulus)) {
        throw UsageError("modulus is not irreducible over GF(" + std::to_string(p) + ")");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->d = d;
    impl->q = static_cast<std::uint32_t>(q);
    impl->modulus = std::move(modulus);
    impl->prime_field = false;
    impl->char2 = (p == 2);
    impl->place.resize(d);
    std::uint32_t pw = 1;
    for (unsigned i = 0; i < d; ++i) {
        impl->place[i] = pw;
        pw *= p;
    }
    build_tables(*impl);
    return Field(std::move(impl));
}

Field Field::builtin(std::uint64_t order) {
    if (order < (1ull << 31) && is_prime(order)) {
        return prime(static_cast<std::uint32_t>(order));
    }
    if (const auto* b = find_builtin(order)) {
        return extension(b->p, b->d, builtin_coeffs(*b));
    }
    throw UsageError("no built-in field of order " + std::to_string(order) +
                     "; supply an explicit modulus as p^d:c0,...,cd");
}

Field Field::parse(std::string_view text) {
    text = strip(text);
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        return builtin(parse_u32(text, "field order"));
    }
    const std::uint32_t p = parse_u32(strip(text.substr(0, caret)), "field characteristic");
    std::string_view rest = text.substr(caret + 1);
    const auto colon = rest.find(':');
    const std::uint32_t d = parse_u32(strip(rest.substr(0, colon)), "extension degree");
    if (colon == std::string_view::npos) {
        if (d == 1) {
            return prime(p);
        }
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < d && q <= kMaxExtensionOrder; ++i) {
            q *= p;
        }
        return builtin(q);
    }
    std::vector<std::uint32_t> coeffs;
    std::string_view list = rest.substr(colon + 1);
    while (true) {
        const auto comma = list.find(',');
        coeffs.push_back(parse_u32(strip(list.substr(0, comma)), "modulus coefficient"));
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    return extension(p, d, std::move(coeffs));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->d; }
std::uint32_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

std::string Field::spec_string() const {
    if (impl_->prime_field) {
        return std::to_string(impl_->p);
    }
    if (const auto* b = find_builtin(impl_->q); b != nullptr && builtin_coeffs(*b) == impl_->modulus) {
        return std::to_string(impl_->q);
    }
    std::string out = std::to_string(impl_->p) + "^" + std::to_string(impl_->d) + ":";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(impl_->modulus[i]);
    }
    return out;
}

Elem Field::add(Elem a, Elem b) const {
    const Impl& f = *impl_;
    if (f.prime_field) {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= f.p ? s - f.p : s);
    }
    if (f.char2) {
        return a ^ b;
    }
    if (!f.add_table.empty()) {
        return f.add_table[static_cast<std::size_t>(a) * f.q + b];
    }
    return f.digit_add(a, b);
}

Elem Field::neg(Elem a) const {
    const Impl& f = *impl_;
    if (f.prime_field) {
        return a == 0 ? 0 : f.p - a;
    }
    if (f.char2) {
        return a;
    }
    return f.neg_table[a];
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    const Impl& f = *impl_;
    if (f.prime_field) {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % f.p);
    }
    if (a == 0 || b == 0) {
        return 0;
    }
    return f.exp[f.log[a] + f.log[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) {
        throw DivisionByZero();
    }
    const Impl& f = *impl_;
    if (f.prime_field) {
        return static_cast<Elem>(mod_inverse(a, f.p));
    }
    const std::uint32_t group = f.q - 1;
    return f.exp[(group - f.log[a]) % group];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
        if (e & 1u) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

void Field::axpy(Elem a, std::span<const Elem> x, std::span<Elem> y) const {
    if (a == 0) {
        return;
    }
    const Impl& f = *impl_;
    const auto& ks = kernels::active_kernels();
    if (f.prime_field) {
        ks.prime_axpy(f.p, a, x, y);
    } else if (f.char2) {
        ks.char2_axpy(kernels::LogTables{f.exp.data(), f.log.data()}, f.log[a], x, y);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            y[i] = add(y[i], mul(a, x[i]));
        }
    }
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> out(impl_->d);
    for (auto& c : out) {
        c = a % impl_->p;
        a /= impl_->p;
    }
    return out;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != impl_->d) {
        throw UsageError("element needs exactly " + std::to_string(impl_->d) + " coefficients");
    }
    Elem out = 0;
    for (unsigned i = 0; i < impl_->d; ++i) {
        if (coeffs[i] >= impl_->p) {
            throw UsageError("coefficient " + std::to_string(coeffs[i]) + " is not below p");
        }
        out += coeffs[i] * impl_->place[i];
    }
    return out;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(impl_->q);
    for (std::uint32_t i = 0; i < impl_->q; ++i) {
        out[i] = i;
    }
    return out;
}

std::string Field::format(Elem a) const {
    if (impl_->d == 1) {
        return std::to_string(a);
    }
    const auto c = coefficients(a);
    std::string out = std::to_string(c[0]);
    for (unsigned i = 1; i < impl_->d; ++i) {
        out += '+';
        out += std::to_string(c[i]);
        out += "*t";
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

Elem Field::parse_element(std::string_view text) const {
    text = strip(text);
    if (impl_->d == 1) {
        const std::uint32_t v = parse_u32(text, "field element");
        if (v >= impl_->p) {
            throw UsageError("element " + std::to_string(v) + " is not below p = " +
                             std::to_string(impl_->p));
        }
        return v;
    }
    if (text.empty()) {
        throw UsageError("empty field element");
    }
    std::vector<std::uint32_t> coeffs(impl_->d, 0);
    std::vector<bool> seen(impl_->d, false);
    std::string_view rest = text;
    while (true) {
        const auto plus = rest.find('+');
        const std::string_view term = strip(rest.substr(0, plus));
        std::uint32_t coeff = 1;
        std::uint32_t power = 0;
        const auto tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            coeff = parse_u32(term, "field element");
        } else {
            std::string_view head = strip(term.substr(0, tpos));
            if (!head.empty()) {
                if (head.back() != '*') {
                    throw UsageError("malformed field element: '" + std::string(text) + "'");
                }
                head.remove_suffix(1);
                coeff = parse_u32(strip(head), "field element");
            }
            std::string_view tail = strip(term.substr(tpos + 1));
            power = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') {
                    throw UsageError("malformed field element: '" + std::string(text) + "'");
                }
                power = parse_u32(strip(tail.substr(1)), "exponent");
            }
        }
        if (power >= impl_->d || coeff >= impl_->p || seen[power]) {
            throw UsageError("malformed field element: '" + std::string(text) + "'");
        }
        seen[power] = true;
        coeffs[power] = coeff;
        if (plus == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(plus + 1);
    }
    return from_coefficients(coeffs);
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) {
        return true;
    }
    return a.impl_->p == b.impl_->p && a.impl_->d == b.impl_->d &&
           a.impl_->modulus == b.impl_->modulus;
}

Elem polynomial_mul(const Field& field, Elem a, Elem b) {
    return reduced_product(field.impl(), a, b);
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) {
        throw UsageError("element index " + std::to_string(value_) + " outside field of order " +
                         std::to_string(field_.order()));
    }
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) {
        throw UsageError("operands belong to different fields (" + a.field().spec_string() +
                         " vs " + b.field().spec_string() + ")");
    }
}

}  // namespace

FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.field().add(a.value(), b.value())};
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.field().mul(a.value(), b.value())};
}

FieldElement ff_inv(const FieldElement& a) { return {a.field(), a.field().inv(a.value())}; }

std::vector<FieldElement> ff_elements(const Field& field) {
    std::vector<FieldElement> out;
    out.reserve(field.order());
    for (Elem e : field.elements()) {
        out.emplace_back(field, e);
    }
    return out;
}

}  // namespace hankel
