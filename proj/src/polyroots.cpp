#include "lcprop/polyroots.hpp"

#include <algorithm>

namespace lcprop {

ExactPoly::ExactPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
    for (Rat& c : coeffs_) c.canonicalize();
    while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat ExactPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactPoly ExactPoly::derivative() const {
    if (degree() == 0) return ExactPoly();
    std::vector<Rat> d;
    d.reserve(coeffs_.size() - 1);
    for (long k = 1; k <= degree(); ++k) d.push_back(Rat(k) * coeff(k));
    return ExactPoly(std::move(d));
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (long k = 0; k < static_cast<long>(out.size()); ++k)
        out[static_cast<std::size_t>(k)] = coeff(k) + o.coeff(k);
    return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (long k = 0; k < static_cast<long>(out.size()); ++k)
        out[static_cast<std::size_t>(k)] = coeff(k) - o.coeff(k);
    return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    if (is_zero() || o.is_zero()) return ExactPoly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm(1), num_gcd(0);
    for (const Rat& c : coeffs_) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    std::vector<Rat> scaled;
    scaled.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) scaled.push_back(c * Rat(den_lcm));
    for (const Rat& c : scaled) {
        Int g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
    }
    // Positive rescale only: sign variations along a Sturm chain depend on
    // every member keeping its sign.
    for (Rat& c : scaled) c /= Rat(num_gcd);
    return ExactPoly(std::move(scaled));
}

std::string ExactPoly::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ", ";
        out += rat_str(coeffs_[k]);
    }
    return out + "]";
}

ExactPoly poly_from_seq(const ExactSeq& s) { return ExactPoly(s.values()); }

ExactPoly poly_rem(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_rem: division by zero polynomial");
    std::vector<Rat> r = a.coeffs();
    const long db = b.degree();
    const Rat lead = b.coeff(db);
    for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
        const Rat factor = r[static_cast<std::size_t>(k)] / lead;
        if (sgn(factor) == 0) continue;
        for (long j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k - db + j)] -= factor * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(std::max<long>(db, 1)));
    return ExactPoly(std::move(r));
}

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        ExactPoly r = poly_rem(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    if (sgn(x.coeff(x.degree())) < 0) {
        std::vector<Rat> flipped;
        flipped.reserve(x.coeffs().size());
        for (const Rat& c : x.coeffs()) flipped.push_back(-c);
        return ExactPoly(std::move(flipped));
    }
    return x;
}

namespace {

// Sturm chain of the square-free part, content-normalized at every step.
std::vector<ExactPoly> sturm_chain(const ExactPoly& p) {
    const ExactPoly sf_part = [&p] {
        const ExactPoly g = poly_gcd(p, p.derivative());
        if (g.degree() == 0) return p.primitive();
        // exact division p / g via repeated remainder-free long division
        std::vector<Rat> q(static_cast<std::size_t>(p.degree() - g.degree()) + 1, Rat(0));
        std::vector<Rat> r = p.coeffs();
        const long dg = g.degree();
        const Rat lead = g.coeff(dg);
        for (long k = static_cast<long>(r.size()) - 1; k >= dg; --k) {
            const Rat factor = r[static_cast<std::size_t>(k)] / lead;
            q[static_cast<std::size_t>(k - dg)] = factor;
            if (sgn(factor) == 0) continue;
            for (long j = 0; j <= dg; ++j)
                r[static_cast<std::size_t>(k - dg + j)] -= factor * g.coeff(j);
        }
        return ExactPoly(std::move(q)).primitive();
    }();

    std::vector<ExactPoly> chain{sf_part, sf_part.derivative().primitive()};
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        if (chain.back().degree() == 0) break;
        ExactPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        std::vector<Rat> neg;
        neg.reserve(r.coeffs().size());
        for (const Rat& c : r.coeffs()) neg.push_back(-c);
        chain.push_back(ExactPoly(std::move(neg)).primitive());
    }
    return chain;
}

enum class Endpoint { neg_inf, finite, pos_inf };

int sign_at(const ExactPoly& p, Endpoint kind, const Rat& x) {
    switch (kind) {
        case Endpoint::finite: return sgn(p.eval(x));
        case Endpoint::pos_inf: return sgn(p.coeff(p.degree()));
        case Endpoint::neg_inf: {
            const int lead = sgn(p.coeff(p.degree()));
            return (p.degree() % 2 == 0) ? lead : -lead;
        }
    }
    return 0;
}

long sign_variations(const std::vector<ExactPoly>& chain, Endpoint kind, const Rat& x) {
    long variations = 0;
    int prev = 0;
    for (const ExactPoly& q : chain) {
        const int s = sign_at(q, kind, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

long sturm_real_root_count(const ExactPoly& p, const std::optional<Rat>& lo,
                           const std::optional<Rat>& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo && hi && *lo >= *hi)
        throw std::invalid_argument("sturm_real_root_count: need lo < hi");
    const auto chain = sturm_chain(p);
    const long v_lo =
        lo ? sign_variations(chain, Endpoint::finite, *lo) : sign_variations(chain, Endpoint::neg_inf, Rat(0));
    const long v_hi =
        hi ? sign_variations(chain, Endpoint::finite, *hi) : sign_variations(chain, Endpoint::pos_inf, Rat(0));
    return v_lo - v_hi;
}

std::pair<long, ExactPoly> factor_out_x(const ExactPoly& p) {
    if (p.is_zero()) return {0, p};
    long k = 0;
    while (k <= p.degree() && sgn(p.coeff(k)) == 0) ++k;
    std::vector<Rat> rest(p.coeffs().begin() + k, p.coeffs().end());
    return {k, ExactPoly(std::move(rest))};
}

bool all_roots_real_negative(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("all_roots_real_negative: zero polynomial");
    for (long k = 0; k <= p.degree(); ++k)
        if (sgn(p.coeff(k)) < 0)
            throw std::invalid_argument("all_roots_real_negative: negative coefficient");
    if (p.degree() == 0) return true;  // no roots at all
    if (sgn(p.coeff(0)) == 0) return false;  // root at 0

    // Multiplicity-weighted count of roots in (-inf, 0): peel square-free
    // layers via gcd with the derivative.
    long weighted = 0;
    ExactPoly f = p.primitive();
    while (f.degree() > 0) {
        weighted += sturm_real_root_count(f, std::nullopt, Rat(0));
        f = poly_gcd(f, f.derivative());
    }
    return weighted == p.degree();
}

RealRootsLcCheck realroots_implies_lc_check(const ExactSeq& s) {
    RealRootsLcCheck out;
    const auto [k, reduced] = factor_out_x(poly_from_seq(s));
    // A structural x^k factor (leading zeros of the sequence) is removed
    // first; a zero polynomial cannot arise since ExactSeq is non-empty.
    if (reduced.is_zero() || (reduced.degree() == 0 && sgn(reduced.coeff(0)) == 0)) {
        out.roots_real_negative = false;
    } else {
        out.roots_real_negative = reduced.degree() == 0 ? true : all_roots_real_negative(reduced);
    }
    out.lc = is_log_concave(s);
    out.implication_holds = !out.roots_real_negative || out.lc.is_lc;
    return out;
}

}  // namespace lcprop
