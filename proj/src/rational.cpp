#include "workbench/rational.hpp"

#include <cctype>

namespace wb {

namespace {

bool valid_integer(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text, true))
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        Rational r;
        r.v_ = mpq_class(mpz_class(text), 1);
        return r;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, true))
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    mpz_class d(den);
    if (sgn(d) == 0)
        throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    Rational r;
    r.v_ = mpq_class(mpz_class(num), d);
    r.v_.canonicalize();
    return r;
}

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = v_.get_num() * scale / v_.get_den();  // truncates toward zero
    bool neg = sgn(scaled) < 0;
    mpz_class mag = abs(scaled);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, std::string(digits + 1 - s.size(), '0'));
    s.insert(s.size() - digits, ".");
    // trim trailing zeros but keep at least one digit after the point
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;
    s.erase(last + 1);
    return neg ? "-" + s : s;
}

}  // namespace wb
