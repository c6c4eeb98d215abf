#include "coopint/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace coopint {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational pow10(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return Rational(p);
}

Rational parse_decimal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }

    long exp10 = 0;
    std::size_t epos = s.find_first_of("eE", pos);
    if (epos != std::string::npos) {
        std::string etext = s.substr(epos + 1);
        if (etext.empty()) throw GameFileError("bad numeric literal: " + text);
        std::size_t eoff = (etext[0] == '+' || etext[0] == '-') ? 1 : 0;
        if (!all_digits(etext.substr(eoff)))
            throw GameFileError("bad numeric literal: " + text);
        exp10 = std::strtol(etext.c_str(), nullptr, 10);
        s = s.substr(0, epos);
    }

    std::string intpart, fracpart;
    std::size_t dot = s.find('.', pos);
    if (dot == std::string::npos) {
        intpart = s.substr(pos);
    } else {
        intpart = s.substr(pos, dot - pos);
        fracpart = s.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty())
        throw GameFileError("bad numeric literal: " + text);
    if (!intpart.empty() && !all_digits(intpart))
        throw GameFileError("bad numeric literal: " + text);
    if (!fracpart.empty() && !all_digits(fracpart))
        throw GameFileError("bad numeric literal: " + text);

    mpz_class digits(intpart.empty() ? std::string("0") + fracpart
                                     : intpart + fracpart,
                     10);
    Rational value(digits);
    long shift = exp10 - static_cast<long>(fracpart.size());
    if (shift > 0) {
        value *= pow10(shift);
    } else if (shift < 0) {
        value /= pow10(-shift);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw GameFileError("empty numeric literal");
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(den) ||
            !all_digits(num[0] == '+' || num[0] == '-' ? num.substr(1) : num))
            throw GameFileError("bad rational literal: " + text);
        Rational r(mpz_class(num, 10), mpz_class(den, 10));
        if (r.get_den() == 0)
            throw GameFileError("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

} // namespace coopint
