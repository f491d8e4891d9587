#include "hkmod/rational.hpp"

#include <cctype>

#include "hkmod/errors.hpp"

namespace hkmod {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto scan_digits = [&]() {
        const std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };

    const bool negative = i < n && text[i] == '-';
    if (negative) ++i;
    const std::size_t num_start = i;
    if (!scan_digits()) return std::nullopt;
    const std::string num = text.substr(num_start, i - num_start);

    std::string den = "1";
    if (i < n && text[i] == '/') {
        ++i;
        const std::size_t den_start = i;
        if (!scan_digits()) return std::nullopt;
        den = text.substr(den_start, i - den_start);
    }
    if (i != n) return std::nullopt;

    const Integer den_z(den);
    if (den_z == 0) return std::nullopt;
    Rational q = make_rational(Integer(num), den_z);
    if (negative) q = -q;
    return q;
}

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer isqrt_floor(const Rational& x) {
    if (x < 0) fail(ErrCode::DegenerateInput, "integer square root of a negative value");
    const Integer fl = floor_of(x);
    Integer out;
    mpz_sqrt(out.get_mpz_t(), fl.get_mpz_t());
    return out;
}

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer factorial_of(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace hkmod
