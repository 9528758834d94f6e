#include <l2hodge/rational.hpp>

#include <l2hodge/error.hpp>

namespace l2hodge {

Rational rational_from_string(const std::string& text) {
    // shape: [+-]? digits [ '/' digits ]
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    bool num_digits = false, slash = false, den_digits = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '/') {
            if (slash || !num_digits)
                throw Error(errc::malformed_input, "bad rational literal: '" + text + "'");
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? den_digits : num_digits) = true;
        } else {
            throw Error(errc::malformed_input, "bad rational literal: '" + text + "'");
        }
    }
    if (!num_digits || (slash && !den_digits))
        throw Error(errc::malformed_input, "bad rational literal: '" + text + "'");

    Rational q;
    if (q.set_str(text, 10) != 0)
        throw Error(errc::malformed_input, "bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw Error(errc::malformed_input, "zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

long to_long(const Rational& q) {
    if (!is_integer(q))
        throw Error(errc::malformed_input, "expected an integer, got " + to_string(q));
    const mpz_class num = q.get_num();
    if (!num.fits_slong_p())
        throw Error(errc::malformed_input, "integer out of range: " + to_string(q));
    return num.get_si();
}

} // namespace l2hodge
