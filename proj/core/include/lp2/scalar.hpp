#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace lp2 {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text form (q >= 1, always with a slash).
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on anything else,
/// including decimal points and zero denominators.
Rational parse_fraction(std::string_view text);

// The field Q. Elements are canonicalized mpq values.
struct RationalField {
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_rational(const Rational& q) const { return q; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const;
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
};

// Z/p for a prime p below 2^63.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_rational(const Rational& q) const;
    Element add(Element a, Element b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    bool is_zero(Element a) const { return a == 0; }

private:
    std::uint64_t p_;
};

/// Smallest prime accepted by the prime-field mode is above this bound.
inline constexpr std::uint64_t kMinPrime = std::uint64_t{1} << 30;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

struct RationalMode {};
struct PrimeMode {
    std::uint64_t p;
};

/// Selects the field used for ranks and kernels. Matrices are always built over Q;
/// in prime mode they are reduced mod p before elimination.
using ScalarMode = std::variant<RationalMode, PrimeMode>;

/// Validates p > 2^30 and primality.
ScalarMode make_prime_mode(std::uint64_t p);

std::string describe(const ScalarMode& mode);

}  // namespace lp2
