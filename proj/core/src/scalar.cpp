#include "lp2/scalar.hpp"

#include <array>
#include <cctype>

namespace lp2 {

std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                  : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' ||
        den.front() == '+') {
        throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return Element(1) / a;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63)) {
        throw std::invalid_argument("prime modulus out of range");
    }
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
    const Integer pz(std::to_string(p_));
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    Integer den = q.get_den() % pz;
    if (den == 0) {
        throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes mod " +
                                std::to_string(p_));
    }
    const Element n = std::stoull(num.get_str());
    const Element d = std::stoull(den.get_str());
    return mul(n, inv(d));
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    // Fermat: a^(p-2)
    Element result = 1;
    Element base = a;
    std::uint64_t e = p_ - 2;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ScalarMode make_prime_mode(std::uint64_t p) {
    if (p <= kMinPrime) {
        throw std::invalid_argument("prime mode requires p > 2^30, got " + std::to_string(p));
    }
    if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not a usable prime");
    }
    return PrimeMode{p};
}

std::string describe(const ScalarMode& mode) {
    if (const auto* pm = std::get_if<PrimeMode>(&mode)) return "prime " + std::to_string(pm->p);
    return "rational";
}

}  // namespace lp2
