#include "icet/money.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace icet {

Money Money::from_dollars(double d) {
    return Money(static_cast<std::int64_t>(std::llround(d * 100.0)));
}

Money Money::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c == '$' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
        s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty money literal: '" + text + "'");

    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-') { negative = true; i = 1; }
    if (i >= s.size()) throw std::invalid_argument("bad money literal: '" + text + "'");

    std::int64_t whole = 0, frac = 0;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad money literal: '" + text + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad money literal: '" + text + "'");
        seen_digit = true;
        if (!seen_dot) {
            whole = whole * 10 + (c - '0');
        } else {
            if (++frac_digits > 2)
                throw std::invalid_argument("money has sub-cent precision: '" + text + "'");
            frac = frac * 10 + (c - '0');
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad money literal: '" + text + "'");
    if (frac_digits == 1) frac *= 10;
    std::int64_t cents = whole * 100 + frac;
    return Money(negative ? -cents : cents);
}

std::string Money::str() const {
    std::int64_t c = cents_;
    std::string sign;
    if (c < 0) { sign = "-"; c = -c; }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s$%lld.%02lld", sign.c_str(),
                  static_cast<long long>(c / 100), static_cast<long long>(c % 100));
    return buf;
}

} // namespace icet
