#include "sepsem/rat.hpp"

#include "sepsem/errors.hpp"

namespace sepsem {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

Int int_from_string(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw input_error("malformed integer literal");
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
}

} // namespace

Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0)
        throw input_error("zero denominator in rational literal");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1)
        return num;
    return num + "/" + denominator(r).str();
}

} // namespace sepsem
