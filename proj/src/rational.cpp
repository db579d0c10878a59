#include "flagdescent/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace fd {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_params: return "invalid-params";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::rank_mismatch: return "rank-mismatch";
        case Errc::degenerate_basis: return "degenerate-basis";
        case Errc::not_positive_system: return "not-a-positive-system";
        case Errc::not_in_normalizer: return "not-in-normalizer";
        case Errc::satake_not_stable: return "satake-not-stable";
        case Errc::not_well_posed: return "not-well-posed";
        case Errc::wbarw_not_in_torus: return "wbarw-not-in-torus";
        case Errc::zero_entry: return "zero-entry";
        case Errc::unsupported_value: return "unsupported-value";
        case Errc::unsupported_extension: return "unsupported-extension";
        case Errc::pi_not_stable: return "pi-prime-not-stable";
        case Errc::not_antidominant: return "not-antidominant";
        case Errc::cocycle_data_inconsistent: return "cocycle-data-inconsistent";
        case Errc::singular_matrix: return "singular-matrix";
        case Errc::parse_error: return "parse-error";
        case Errc::unknown_family: return "unknown-family";
    }
    return "error";
}

GaussianRational::GaussianRational(long re_num, long re_den, long im_num, long im_den)
    : re_(re_num, re_den), im_(im_num, im_den) {
    if (re_den == 0 || im_den == 0) fail(Errc::invalid_params, "zero denominator");
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) fail(Errc::zero_entry, "division by zero");
    Rational n = o.norm();
    GaussianRational num = *this * o.conj();
    return {num.re_ / n, num.im_ / n};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) fail(Errc::zero_entry, "inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long n) const {
    if (n == 0) return GaussianRational(1);
    GaussianRational base = n > 0 ? *this : inverse();
    unsigned long k = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    GaussianRational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag = rat_str(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat_str(re_) + "+" + imag;
    return rat_str(re_) + imag; // sign carried by the numerator
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

namespace {

// Reads a signed rational "[-]a[/b]" starting at pos; advances pos.
Rational parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail(Errc::parse_error, "expected number in scalar at position " + std::to_string(start));
    std::string num = s.substr(digits, pos - digits);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) fail(Errc::parse_error, "expected denominator at position " + std::to_string(dstart));
        den = s.substr(dstart, pos - dstart);
    }
    Rational q(num + "/" + den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(Errc::parse_error, "empty scalar");

    size_t pos = 0;
    Rational re = 0, im = 0;
    // Pure "i" / "-i" / "+i" shorthands.
    auto is_bare_i = [&](size_t p) { return p + 1 == s.size() && s[p] == 'i'; };
    if (is_bare_i(0)) return GaussianRational(Rational(0), Rational(1));
    if ((s[0] == '-' || s[0] == '+') && is_bare_i(1))
        return GaussianRational(Rational(0), Rational(s[0] == '-' ? -1 : 1));

    Rational first = parse_rat(s, pos);
    bool first_imag = false;
    if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i') fail(Errc::parse_error, "expected 'i' after '*'");
        ++pos;
        first_imag = true;
    }
    (first_imag ? im : re) = first;
    if (pos < s.size()) {
        if (first_imag) fail(Errc::parse_error, "imaginary part must come last");
        if (s[pos] != '+' && s[pos] != '-') fail(Errc::parse_error, "expected sign before imaginary part");
        if (is_bare_i(pos + 1)) {
            im = s[pos] == '-' ? -1 : 1;
            pos += 2;
        } else {
            im = parse_rat(s, pos);
            if (pos + 1 >= s.size() || s[pos] != '*' || s[pos + 1] != 'i')
                fail(Errc::parse_error, "expected '*i' after imaginary part");
            pos += 2;
        }
    }
    if (pos != s.size()) fail(Errc::parse_error, "trailing characters in scalar: " + s.substr(pos));
    return GaussianRational(re, im);
}

bool is_power_of_two_times_sign(const Rational& q) {
    if (q == 0) return false;
    Integer num = abs(q.get_num());
    Integer den = q.get_den();
    // lowest terms: at most one of num/den is even, each must be a 2-power
    auto pow2 = [](const Integer& v) {
        if (v <= 0) return false;
        size_t bit = mpz_scan1(v.get_mpz_t(), 0);
        return mpz_sizeinbase(v.get_mpz_t(), 2) == bit + 1;
    };
    return pow2(num) && pow2(den);
}

namespace {

bool dyadic(const Rational& q) {
    Integer den = q.get_den();
    size_t bit = mpz_scan1(den.get_mpz_t(), 0);
    return mpz_sizeinbase(den.get_mpz_t(), 2) == bit + 1;
}

} // namespace

ScalarClass classify_scalar(const GaussianRational& z) {
    ScalarClass out;
    out.in_dyadic_gaussian = dyadic(z.re()) && dyadic(z.im());
    out.in_dyadic_rational = z.is_real() && dyadic(z.re());
    if (out.in_dyadic_gaussian) {
        bool axis_real = (z.im() == 0) && is_power_of_two_times_sign(z.re());
        bool axis_imag = (z.re() == 0) && is_power_of_two_times_sign(z.im());
        out.is_unit_of_dyadic_gaussian = axis_real || axis_imag;
    }
    return out;
}

bool is_dyadic_gaussian_unit(const GaussianRational& z) {
    if (z.is_zero()) return false;
    if (!dyadic(z.re()) || !dyadic(z.im())) return false;
    return is_power_of_two_times_sign(z.norm());
}

} // namespace fd
