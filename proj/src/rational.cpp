#include "persist/rational.hpp"

#include "persist/errors.hpp"

#include <cctype>

namespace persist {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw ParseError("empty rational literal");
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        if (c == '-' || c == '+') {
            // sign is only allowed at the start of numerator or denominator
            if (i != 0 && text[i - 1] != '/')
                throw ParseError("misplaced sign in rational literal '" + text + "'");
            continue;
        }
        if (c == '.')
            throw ParseError("decimal notation rejected, use p/q: '" + text + "'");
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid rational literal '" + text + "'");
    }
    if (slashes > 1)
        throw ParseError("invalid rational literal '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

int sign(const Rational& value)
{
    return sgn(value);
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

} // namespace persist
