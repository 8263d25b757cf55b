#include "commcount/quadrat.hpp"

#include "commcount/errors.hpp"

#include <cctype>

namespace commcount {

QuadRat& QuadRat::operator*=(const QuadRat& o) {
    Rat na = a_ * o.a_ + 5 * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadRat QuadRat::inverse() const {
    if (is_zero()) throw input_error("division by zero in Q(sqrt5)");
    Rat n = norm();
    return QuadRat(a_ / n, -b_ / n);
}

QuadRat& QuadRat::operator/=(const QuadRat& o) {
    *this *= o.inverse();
    return *this;
}

QuadRat QuadRat::pow(long e) const {
    QuadRat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QuadRat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool QuadRat::is_integral() const {
    // x = A + B (1+sqrt5)/2 with A, B in Z  <=>  2b and a - b are integers.
    Rat tb = 2 * b_;
    Rat d = a_ - b_;
    return tb.get_den() == 1 && d.get_den() == 1;
}

int sign_at_embedding(const QuadRat& x, Embedding emb) {
    // Sign of a + b*sqrt5; the conjugate embedding flips b.
    Rat a = x.a();
    Rat b = emb == Embedding::fixed ? x.b() : -x.b();
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs sqrt5 |b| decided by squared comparison. The two
    // squares are never equal for rational a, b != 0 (5 is not a square).
    return cmp(a * a, 5 * b * b) > 0 ? sa : sb;
}

bool totally_positive(const QuadRat& x) {
    return sign_at_embedding(x, Embedding::fixed) > 0 &&
           sign_at_embedding(x, Embedding::conjugate) > 0;
}

std::optional<QuadRat> is_square_in_k(const QuadRat& x) {
    if (x.is_zero()) return QuadRat(0);
    if (sign_at_embedding(x, Embedding::fixed) < 0 ||
        sign_at_embedding(x, Embedding::conjugate) < 0)
        return std::nullopt;
    Rat s;
    if (!rat_sqrt(x.norm(), s)) return std::nullopt;
    for (const Rat& t : {(x.a() + s) / 2, (x.a() - s) / 2}) {
        Rat c;
        if (!rat_sqrt(t, c)) continue;
        if (c != 0) {
            QuadRat r(c, x.b() / (2 * c));
            if (r * r == x) return r;
        } else if (x.b() == 0) {
            // x rational with c = 0: a square exactly when x/5 is one,
            // with root d*sqrt5 (e.g. 5 -> sqrt5).
            Rat d;
            if (rat_sqrt(x.a() / 5, d)) return QuadRat(Rat(0), d);
        }
    }
    return std::nullopt;
}

bool same_square_class(const QuadRat& x, const QuadRat& y) {
    if (x.is_zero() || y.is_zero()) throw input_error("square class of zero");
    return is_square_in_k(x * y).has_value();
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat parse_rat(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t dstart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == dstart) throw input_error("bad rational literal: '" + text + "'");
    Int num(text.substr(dstart, i - dstart));
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        size_t estart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == estart) throw input_error("bad rational literal: '" + text + "'");
        den = Int(text.substr(estart, i - estart));
        if (den == 0) throw input_error("zero denominator in '" + text + "'");
    }
    if (i != text.size()) throw input_error("bad rational literal: '" + text + "'");
    if (neg) num = -num;
    return make_rat(num, den);
}

QuadRat parse_elem(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw input_error("empty element literal");

    // Split at the first +/- that is not the leading sign; rationals contain
    // no interior signs, so this separates the two terms.
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') { split = i; break; }
    }

    auto strip_r = [](const std::string& part) -> std::optional<std::string> {
        if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*r") == 0)
            return part.substr(0, part.size() - 2);
        if (part == "r") return std::string("1");
        if (part == "-r") return std::string("-1");
        if (part == "+r") return std::string("1");
        return std::nullopt;
    };

    if (split == std::string::npos) {
        if (auto b = strip_r(s)) return QuadRat(Rat(0), parse_rat(*b));
        return QuadRat(parse_rat(s));
    }
    std::string first = s.substr(0, split);
    std::string second = s.substr(split); // keeps the sign
    if (strip_r(first)) throw input_error("sqrt5 term must come last: '" + raw + "'");
    auto b = strip_r(second);
    if (!b) throw input_error("expected '*r' term after sign: '" + raw + "'");
    return QuadRat(parse_rat(first), parse_rat(*b));
}

std::string elem_str(const QuadRat& x) {
    if (x.b() == 0) return rat_str(x.a());
    std::string bpart = rat_str(abs(x.b())) + "*r";
    std::string sign = x.b() < 0 ? "-" : "+";
    if (x.a() == 0) return (x.b() < 0 ? "-" : "") + bpart;
    return rat_str(x.a()) + sign + bpart;
}

} // namespace commcount
