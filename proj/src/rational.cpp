#include "homolab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace homolab {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Q parse_decimal(const std::string& text)
{
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string e = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool eneg = false;
        if (!e.empty() && (e[0] == '-' || e[0] == '+')) {
            eneg = e[0] == '-';
            e = e.substr(1);
        }
        if (!all_digits(e) || e.size() > 6) throw MalformedInputError("malformed number: " + text);
        exponent = std::stol(e) * (eneg ? -1 : 1);
    }
    std::string intpart = s, frac;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        intpart = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if (intpart.empty() && frac.empty()) throw MalformedInputError("malformed number: " + text);
    if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac)))
        throw MalformedInputError("malformed number: " + text);
    Z num(intpart.empty() ? std::string("0") + frac : intpart + frac, 10);
    exponent -= static_cast<long>(frac.size());
    Z ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Q out = exponent >= 0 ? Q(num * ten_pow) : Q(num, ten_pow);
    out.canonicalize();
    return neg ? Q(-out) : out;
}

}  // namespace

Q parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    std::string pd = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? p.substr(1) : p;
    if (!all_digits(pd) || !all_digits(q)) throw MalformedInputError("malformed rational: " + text);
    Z den(q, 10);
    if (den == 0) throw MalformedInputError("zero denominator: " + text);
    Q out(Z(p[0] == '+' ? pd : p, 10), den);
    out.canonicalize();
    return out;
}

std::string to_string(const Q& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Q& q) { return q.get_d(); }

double round12(double x)
{
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace homolab
