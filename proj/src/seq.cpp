#include "lcprop/seq.hpp"

#include <sstream>

namespace lcprop {

ExactSeq::ExactSeq(std::vector<Rat> values) : vals_(std::move(values)) {
    if (vals_.empty()) throw std::invalid_argument("ExactSeq: length must be >= 1");
    for (Rat& v : vals_) {
        v.canonicalize();  // GMP comparisons assume canonical operands
        if (sgn(v) < 0) throw std::invalid_argument("ExactSeq: negative value " + rat_str(v));
    }
}

ExactSeq ExactSeq::parse(const std::string& text) {
    std::vector<Rat> vals;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::istringstream fields(tok);
        std::string f;
        while (fields >> f) vals.push_back(parse_rat(f));
    }
    if (vals.empty()) throw std::invalid_argument("ExactSeq: empty input");
    return ExactSeq(std::move(vals));
}

Rat ExactSeq::sum() const {
    Rat s(0);
    for (const Rat& v : vals_) s += v;
    return s;
}

ExactSeq ExactSeq::canonical() const {
    std::size_t n = vals_.size();
    while (n > 1 && sgn(vals_[n - 1]) == 0) --n;
    return ExactSeq(std::vector<Rat>(vals_.begin(), vals_.begin() + static_cast<long>(n)));
}

long ExactSeq::support_max() const {
    for (long i = size() - 1; i >= 0; --i)
        if (sgn(at(i)) != 0) return i;
    return -1;
}

bool ExactSeq::operator==(const ExactSeq& o) const {
    return canonical().values() == o.canonical().values();
}

std::string ExactSeq::str() const {
    std::string out = "[";
    for (long i = 0; i < size(); ++i) {
        if (i) out += ", ";
        out += rat_str(at(i));
    }
    return out + "]";
}

LcReport is_log_concave(const ExactSeq& s) {
    LcReport report;
    report.is_lc = true;
    for (long i = 1; i <= s.size(); ++i) {
        Rat deficit = s.at(i) * s.at(i) - s.at(i - 1) * s.at(i + 1);
        if (sgn(deficit) < 0 && !report.first_violation) {
            report.is_lc = false;
            report.first_violation = i;
        }
        report.deficits.emplace_back(i, std::move(deficit));
    }
    return report;
}

bool is_unimodal(const ExactSeq& s) {
    long i = 1;
    while (i < s.size() && s.at(i - 1) <= s.at(i)) ++i;
    while (i < s.size() && s.at(i - 1) >= s.at(i)) ++i;
    return i == s.size();
}

ExactSeq convolve(const ExactSeq& a, const ExactSeq& b) {
    std::vector<Rat> out(static_cast<std::size_t>(a.size() + b.size() - 1), Rat(0));
    for (long i = 0; i < a.size(); ++i) {
        if (sgn(a.at(i)) == 0) continue;
        for (long j = 0; j < b.size(); ++j)
            out[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return ExactSeq(std::move(out));
}

ExactSeq normalize(const ExactSeq& s) {
    const Rat total = s.sum();
    if (sgn(total) == 0) throw std::invalid_argument("normalize: all-zero sequence");
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (const Rat& v : s.values()) out.push_back(v / total);
    return ExactSeq(std::move(out));
}

Rat abel_oracle(const ExactSeq& p, const std::vector<Rat>& c, long l, long m, long i) {
    if (!(l >= m && m >= i && i >= 0))
        throw std::invalid_argument("abel_oracle: need l >= m >= i >= 0");
    if (static_cast<long>(c.size()) < i + 1)
        throw std::invalid_argument("abel_oracle: c must have at least i+1 entries");
    std::vector<Rat> weights = c;
    for (Rat& w : weights) w.canonicalize();

    Rat direct(0);
    for (long j = 0; j <= i; ++j)
        direct += p.at(l + j) * p.at(m - j) * weights[static_cast<std::size_t>(j)];

    // Summation by parts against the prefix sums C_j (C_{-1} = 0).
    Rat by_parts(0), prefix(0);
    for (long j = 0; j <= i; ++j) {
        prefix += weights[static_cast<std::size_t>(j)];
        by_parts += (p.at(l + j) * p.at(m - j) - p.at(l + j + 1) * p.at(m - j - 1)) * prefix;
    }
    by_parts += prefix * p.at(l + i + 1) * p.at(m - i - 1);

    if (direct != by_parts) throw std::logic_error("abel_oracle: computation paths disagree");
    return direct;
}

}  // namespace lcprop
