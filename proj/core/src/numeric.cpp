#include "spchar/numeric.hpp"

#include "spchar/errors.hpp"

#include <cctype>

namespace spchar {

Integer to_integer(const Rational& q) {
    if (!is_integral(q))
        throw internal_consistency_error("expected an integer, got " + to_string(q));
    return q.get_num();
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_int(num))
        throw invalid_argument_error("malformed rational: '" + text + "'");
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(Integer(num));
    } else {
        const std::string den = text.substr(slash + 1);
        if (!valid_int(den) || Integer(den) == 0)
            throw invalid_argument_error("malformed rational: '" + text + "'");
        q = Rational(Integer(num), Integer(den));
        q.canonicalize();
    }
    return q;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0 && exponent < 0)
        throw invalid_argument_error("zero cannot be raised to a negative power");
    Integer num, den;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r = (exponent > 0) ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace spchar
