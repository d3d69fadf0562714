#include "germlab/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace germlab {

namespace {

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty integer in rational literal");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InvalidInput("bad integer in rational literal: '" + s + "'");
    }
    if (pos != s.size()) throw InvalidInput("trailing junk in rational literal: '" + s + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.size() > 9) throw InvalidInput("decimal literal too precise: '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !head.empty() && head[0] == '-';
        std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head);
        std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        if (f < 0) throw InvalidInput("bad decimal literal: '" + text + "'");
        std::int64_t num = whole * den + (neg ? -f : f);
        return Rational(num, den);
    }
    return Rational(parse_int(text));
}

}  // namespace germlab
