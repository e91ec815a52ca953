#include "digitforge/numberspec.hpp"

#include "digitforge/error.hpp"

#include <cctype>

namespace digitforge {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace((unsigned char)c)) out += c;
    return out;
}

} // namespace

Rat parse_rational(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) fail(errc::parse_error, "empty rational");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        fail(errc::parse_error, "bad rational '" + text + "'");
    if (sgn(r.get_den()) == 0)
        fail(errc::parse_error, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

IntPolynomial parse_polynomial(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) fail(errc::parse_error, "empty polynomial");

    std::vector<Int> coeffs;
    size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail(errc::parse_error, "expected + or - between terms");
        }

        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i]))
            digits += s[i++];
        const bool has_coeff = !digits.empty();
        Int coeff = has_coeff ? Int(digits) : Int(1);

        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail(errc::parse_error, "dangling '*'");
            ++i;
            if (i >= s.size() || s[i] != 'x')
                fail(errc::parse_error, "expected x after '*'");
        }

        unsigned long exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    e += s[i++];
                if (e.empty()) fail(errc::parse_error, "missing exponent");
                if (e.size() > 5)
                    fail(errc::parse_error, "exponent too large");
                exp = std::stoul(e);
            }
        } else if (!has_coeff) {
            fail(errc::parse_error, "term with neither coefficient nor x");
        }
        if (exp > 10000) fail(errc::parse_error, "exponent too large");

        if (coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
        if (sign < 0) coeffs[exp] -= coeff;
        else coeffs[exp] += coeff;
        first = false;
    }

    IntPolynomial p{std::move(coeffs)};
    if (p.is_zero()) fail(errc::parse_error, "polynomial is zero");
    return p;
}

NumberSpec parse_number_spec(const std::string& spec,
                             const std::string& interval, bool normalize) {
    std::string body = strip_spaces(spec);
    std::string iv = strip_spaces(interval);
    if (auto at = body.find('@'); at != std::string::npos) {
        if (!iv.empty())
            fail(errc::parse_error,
                 "interval given both inline and separately");
        iv = body.substr(at + 1);
        body = body.substr(0, at);
    }
    if (body.empty()) fail(errc::parse_error, "empty number spec");

    if (body.find('x') == std::string::npos) {
        if (!iv.empty())
            fail(errc::parse_error, "rational spec takes no interval");
        Rat r = parse_rational(body);
        if (normalize) r -= Rat(floor_rat(r));
        return NumberSpec{AlgebraicNumber::rational(r),
                          "rat:" + r.get_str()};
    }

    IntPolynomial p = parse_polynomial(body);
    auto comma = iv.find(',');
    if (iv.empty() || comma == std::string::npos)
        fail(errc::parse_error, "polynomial spec needs an interval lo,hi");
    Rat lo = parse_rational(iv.substr(0, comma));
    Rat hi = parse_rational(iv.substr(comma + 1));

    AlgebraicNumber num = AlgebraicNumber::validate(p, lo, hi);
    if (normalize) num = num.normalized_unit();

    std::string c = "poly:";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) c += ',';
        c += p.coeff(i).get_str();
    }
    c += '@';
    c += lo.get_str();
    c += ',';
    c += hi.get_str();
    if (normalize) c += ";unit";
    return NumberSpec{std::move(num), std::move(c)};
}

} // namespace digitforge
