#include "toric/numbers.hpp"

#include <cctype>

namespace toric {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return Integer(numerator(q)).str();
    return Integer(numerator(q)).str() + "/" + Integer(denominator(q)).str();
}

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> input_error {
        return input_error("not a rational: '" + text + "'");
    };
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw bad();
    std::string body = text.substr(begin, end - begin);

    auto parse_int = [&](const std::string& s) -> Integer {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
        // the mpz string constructor takes an optional '-' but no '+'
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };

    std::size_t slash = body.find('/');
    if (slash == std::string::npos) return Rational(parse_int(body));
    Integer p = parse_int(body.substr(0, slash));
    Integer q = parse_int(body.substr(slash + 1));
    if (q == 0) throw input_error("zero denominator: '" + text + "'");
    // the backend mangles negative denominators, so fold the sign into p
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(q * 10^digits) half away from zero
    Rational scaled = q * Rational(scale);
    Integer n = num(scaled), d = den(scaled);
    bool neg = n < 0;
    if (neg) n = -n;
    Integer quot = n / d, rem = n % d;
    if (2 * rem >= d) quot += 1;

    std::string s = quot.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (neg && quot != 0) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace toric
