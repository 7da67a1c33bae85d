#include "homnov/rational.hpp"

#include <cctype>

namespace homnov {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::size_t num_start = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!all_digits(num, num_start, num.size())) return std::nullopt;

    Int p(num);
    if (slash == std::string::npos) return Rat(p);

    std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0, den.size())) return std::nullopt;
    Int q(den);
    if (q == 0) return std::nullopt;
    return Rat(p, q);
}

std::string format_rational(const Rat& value) {
    Int p = numerator(value);
    Int q = denominator(value);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

} // namespace homnov
