#include "upward/rational.hpp"

#include <cctype>
#include <ostream>

#include "upward/errors.hpp"

namespace upward {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.sign() == 0) throw DomainError("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rat Rat::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("empty rational literal: \"" + text + "\"");

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction literal: \"" + text + "\"");
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
        value = mpq_class(n, d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string ip = s.substr(0, dot);
        const std::string fp = s.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp))
            throw ParseError("malformed decimal literal: \"" + text + "\"");
        mpz_class scaled(ip + fp, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        value = mpq_class(scaled, den);
    } else {
        if (!all_digits(s)) throw ParseError("malformed integer literal: \"" + text + "\"");
        value = mpq_class(mpz_class(s, 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rat(std::move(value));
}

std::string Rat::str() const {
    const mpz_class num = v_.get_num();
    const mpz_class den = v_.get_den(); // canonical: den > 0, gcd(num, den) = 1
    if (den == 1) return num.get_str();

    // A finite decimal expansion exists iff den = 2^a * 5^b.
    mpz_class rest = den;
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.get_str() + "/" + den.get_str();

    const unsigned digits = std::max(twos, fives);
    mpz_class pow10(1);
    for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
    mpz_class scaled = ::abs(num) * pow10 / den; // exact by construction

    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back(); // den != 1, so a nonzero digit remains
    return (sgn(num) < 0 ? "-" : "") + body;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat pow2_floor(const Rat& r) {
    if (r.sign() <= 0) throw DomainError("pow2_floor needs a positive value");
    // 2^(bits(n) - bits(d) - 1) <= n/d < 2^(bits(n) - bits(d) + 1)
    const long bits_n = static_cast<long>(mpz_sizeinbase(r.raw().get_num().get_mpz_t(), 2));
    const long bits_d = static_cast<long>(mpz_sizeinbase(r.raw().get_den().get_mpz_t(), 2));
    long e = bits_n - bits_d;
    auto pow2 = [](long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
        mpq_class q = k >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
        q.canonicalize();
        return q;
    };
    mpq_class candidate = pow2(e);
    if (candidate > r.raw()) {
        --e;
        candidate = pow2(e);
    } else if (pow2(e + 1) <= r.raw()) {
        ++e;
        candidate = pow2(e);
    }
    return Rat(std::move(candidate));
}

Rat sqrt_lower_bound(const Rat& sq) {
    if (sq.sign() < 0) throw DomainError("sqrt_lower_bound of a negative value");
    if (sq.sign() == 0) return Rat(0);
    // sqrt(n/d) = sqrt(n*d)/d >= floor(sqrt(n*d))/d, and n*d >= 1 keeps the
    // floor within a factor two of the true root.
    const mpz_class n = sq.v_.get_num();
    const mpz_class d = sq.v_.get_den();
    mpz_class root = sqrt(mpz_class(n * d));
    mpq_class r(root, d);
    r.canonicalize();
    return Rat(std::move(r));
}

} // namespace upward
