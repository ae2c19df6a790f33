#include "lcprop/rational.hpp"

#include <cctype>

namespace lcprop {

namespace {

bool is_signed_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const auto slash = s.find('/');
    bool well_formed;
    if (slash == std::string::npos) {
        well_formed = is_signed_integer(s);
    } else {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        well_formed = is_signed_integer(num) && is_signed_integer(den) &&
                      den.find('-') == std::string::npos && den.find('+') == std::string::npos;
    }
    Rat q;
    if (!well_formed || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string rat_decimal(const Rat& q, int digits) {
    if (digits < 0) digits = 0;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const bool neg = sgn(q) < 0;
    Rat a = abs(q);
    Int scaled_num = a.get_num() * scale;
    Int whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), a.get_den().get_mpz_t());
    std::string body = whole.get_str();
    std::string out = "~";
    if (neg) out += "-";
    if (digits == 0) return out + body;
    while (body.size() < static_cast<std::size_t>(digits) + 1) body.insert(body.begin(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return out + body;
}

Rat rat_pow(const Rat& q, long e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
}

Rat binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rat(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

}  // namespace lcprop
