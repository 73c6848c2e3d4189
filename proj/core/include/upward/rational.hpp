#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace upward {

// Exact rational scalar backed by GMP.
//
// A thin value wrapper rather than a bare mpq_class: it keeps gmpxx
// expression templates out of overload resolution (so Rat works in
// std::min, ternaries and deduced contexts) and pins down the two text
// forms used by the file formats:
//
//   decimal  "-3", "0.25", "12.5"   (exact, no binary rounding)
//   fraction "1/3", "-7/12"         (lowest terms, positive denominator)
//
// str() emits the canonical form: an integer when the denominator is 1,
// else the shortest exact decimal when one exists, else "p/q".
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);

    // Parses the canonical text forms above. Throws ParseError.
    static Rat parse(const std::string& text);

    std::string str() const;
    double approx() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    Rat abs() const;

    const mpq_class& raw() const { return v_; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    mpq_class v_;

    friend Rat sqrt_lower_bound(const Rat& sq);
    friend Rat pow2_floor(const Rat& r);
};

// Deterministic rational lower bound on sqrt(sq) for sq >= 0.
// Returns r with r <= sqrt(sq) and r > sqrt(sq)/2 whenever sq > 0
// (exact integer square roots come back exact). Used wherever a length
// is needed from an exact squared distance: the callers only require a
// positive bound below the true value, never the irrational value itself.
Rat sqrt_lower_bound(const Rat& sq);

// Largest power of two <= r, for r > 0. Iterated constructions (deformation
// chains) snap their step budgets to powers of two: a dyadic displacement
// keeps coordinate denominators from compounding step over step, which an
// unrounded clearance-derived budget would do exponentially.
Rat pow2_floor(const Rat& r);

} // namespace upward
