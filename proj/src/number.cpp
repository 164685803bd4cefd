#include "hpade/number.hpp"

#include <cctype>
#include <sstream>

namespace hpade {

namespace {

Rational parse_decimal(const std::string& text) {
    // mantissa [.fraction] [e exponent]
    std::string mant = text;
    long expo = 0;
    auto epos = mant.find_first_of("eE");
    if (epos != std::string::npos) {
        expo = std::stol(mant.substr(epos + 1));
        mant = mant.substr(0, epos);
    }
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        expo -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+")
        throw std::invalid_argument("malformed number: " + text);
    // strip leading zeros: the GMP string constructor reads "09" as octal
    std::string sign;
    if (mant[0] == '+' || mant[0] == '-') {
        if (mant[0] == '-') sign = "-";
        mant.erase(0, 1);
    }
    auto first = mant.find_first_not_of('0');
    mant = first == std::string::npos ? "0" : mant.substr(first);
    if (mant.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed number: " + text);
    Int num(sign + mant);
    Int den = 1;
    Int ten = 10;
    if (expo >= 0) {
        num *= boost::multiprecision::pow(ten, static_cast<unsigned>(expo));
    } else {
        den = boost::multiprecision::pow(ten, static_cast<unsigned>(-expo));
    }
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);  // two-argument ctor canonicalizes
    }
    if (text.find('.') != std::string::npos ||
        text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos) {
        return parse_decimal(text);
    }
    return Rational(Int(text), Int(1));
}

std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string fixed_digits(const Float& x, int digits) {
    return x.str(digits, std::ios_base::fixed);
}

Float to_float(const Rational& q) { return Float(q); }

Rational dyadic_midpoint(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("dyadic_midpoint: empty interval");
    Rational width = hi - lo;
    // 2^-k <= width/4 guarantees the rounded point stays strictly inside.
    unsigned k = 2;
    Rational step(1, 4);
    while (step * 4 > width) {
        step /= 2;
        ++k;
    }
    Rational mid = (lo + hi) / 2;
    Int two_k = Int(1) << k;
    Int n = Int(boost::multiprecision::numerator(mid) * two_k /
                boost::multiprecision::denominator(mid));
    for (int probe = 0; probe <= 1; ++probe) {
        Rational cand(n + probe, two_k);
        if (lo < cand && cand < hi) return cand;
    }
    // width >= 4*2^-k, so one of n/2^k, (n+1)/2^k is always inside
    throw std::logic_error("dyadic_midpoint: no dyadic point found");
}

namespace {

// simplest rational in open (lo, hi) with 0 <= lo < hi
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    Int fl = Int(boost::multiprecision::numerator(lo) /
                 boost::multiprecision::denominator(lo));
    Rational integer_cand(fl + 1, 1);
    if (lo < integer_cand && integer_cand < hi) return integer_cand;
    if (Rational(fl, 1) > lo && Rational(fl, 1) < hi) return Rational(fl, 1);
    // both endpoints lie in [fl, fl+1); recurse on reciprocals of fractional parts
    Rational lf = lo - fl;
    Rational hf = hi - fl;
    if (hf > 1) hf = 1;  // cap: anything above fl+1 is covered by integer_cand
    Rational inner;
    if (lf == 0) {
        // (0, hf): simplest is 1/ceil(1/hf + small) -> 1/(floor(1/hf)+1)
        Rational inv = 1 / hf;
        Int fi = Int(boost::multiprecision::numerator(inv) /
                     boost::multiprecision::denominator(inv));
        inner = Rational(Int(1), fi + 1);
        if (!(inner < hf)) inner = Rational(Int(1), fi + 2);
        return Rational(fl, 1) + inner;
    }
    return Rational(fl, 1) + 1 / simplest_nonneg(1 / hf, 1 / lf);
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -simplest_nonneg(-hi, -lo);
    if (lo == 0) return simplest_nonneg(lo, hi);
    return simplest_nonneg(lo, hi);
}

}  // namespace hpade
