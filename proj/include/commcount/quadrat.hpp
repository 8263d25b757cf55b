#pragma once

#include "commcount/modmath.hpp"

#include <optional>
#include <string>

namespace commcount {

/// Element a + b*sqrt(5) of Q(sqrt 5) with exact rational coordinates.
/// Coordinates are kept reduced with positive denominators (mpq canonical
/// form), so equality is coordinate-wise.
class QuadRat {
public:
    QuadRat() : a_(0), b_(0) {}
    QuadRat(long n) : a_(n), b_(0) {}
    explicit QuadRat(const Rat& a) : a_(a), b_(0) {}
    QuadRat(const Rat& a, const Rat& b) : a_(a), b_(b) {}

    static QuadRat sqrt5() { return QuadRat(Rat(0), Rat(1)); }
    // The golden ratio (1 + sqrt 5)/2, positive at the fixed embedding and
    // negative at the conjugate one.
    static QuadRat phi() { return QuadRat(Rat(1, 2), Rat(1, 2)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadRat conjugate() const { return QuadRat(a_, -b_); }
    Rat norm() const { return a_ * a_ - 5 * b_ * b_; }

    // Membership in the ring of integers Z[(1+sqrt5)/2].
    bool is_integral() const;

    QuadRat operator-() const { return QuadRat(-a_, -b_); }
    QuadRat& operator+=(const QuadRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadRat& operator-=(const QuadRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadRat& operator*=(const QuadRat& o);
    QuadRat& operator/=(const QuadRat& o);

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
    friend bool operator==(const QuadRat& x, const QuadRat& y) = default;

    QuadRat inverse() const;
    QuadRat pow(long e) const;

private:
    Rat a_, b_;
};

enum class Embedding { fixed, conjugate };

// Exact sign of x at the chosen real embedding (sqrt5 -> +2.236... for the
// fixed one, -2.236... for the conjugate). Decided by comparing a^2 with
// 5 b^2; no floating point.
int sign_at_embedding(const QuadRat& x, Embedding emb);

bool totally_positive(const QuadRat& x);

// A square root of x in Q(sqrt5) when one exists. x is a square iff
// norm(x) = s^2 for a rational s and one of (a+s)/2, (a-s)/2 is a rational
// square (the root is reconstructed from that branch).
std::optional<QuadRat> is_square_in_k(const QuadRat& x);

// x and y generate the same class of k^x/(k^x)^2. Errors on zero input.
bool same_square_class(const QuadRat& x, const QuadRat& y);

// Literal grammar: elem := rat | rat sign rat "*r" | [sign] rat "*r" with
// rat := ["-"] digits ["/" digits]; "r" stands for sqrt5.
QuadRat parse_elem(const std::string& text);
std::string elem_str(const QuadRat& x);

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& text);

} // namespace commcount
