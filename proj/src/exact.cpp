#include "gtkit/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>

namespace gtkit {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr mpfr_prec_t kPrecisionBits = 256;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

Integer brent_factor(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

// Prime factorization of n > 1 with no factor below the trial limit.
void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r = sqrt(n);
        std::map<Integer, unsigned> sub;
        factor_large(r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Integer d = brent_factor(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

}  // namespace

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

SquareSplit split_square(const Integer& n) {
    if (n <= 0) throw DomainError("split_square needs a positive integer");
    SquareSplit out{1, 1};
    Integer rest = n;
    if (mpz_perfect_square_p(rest.get_mpz_t())) return {sqrt(rest), 1};
    for (unsigned long p : small_primes()) {
        if (Integer(p) * p > rest) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) out.square_root *= p;
        if (e % 2) out.free_part *= p;
    }
    if (rest > 1) {
        Integer limit = Integer(kTrialLimit) * kTrialLimit;
        if (rest <= limit) {
            out.free_part *= rest;  // no prime factor below sqrt(rest) remains
        } else {
            std::map<Integer, unsigned> fac;
            factor_large(rest, fac);
            for (auto& [p, e] : fac) {
                for (unsigned i = 0; i < e / 2; ++i) out.square_root *= p;
                if (e % 2) out.free_part *= p;
            }
        }
    }
    return out;
}

SqrtRational::SqrtRational(long v) : SqrtRational(Rational(v)) {}

SqrtRational::SqrtRational(const Rational& v) {
    if (v == 0) return;
    sign_ = sgn(v);
    coeff_ = abs(v);
}

SqrtRational SqrtRational::from_square(const Rational& square, int sign) {
    if (square < 0) throw DomainError("square root of a negative rational");
    SqrtRational out;
    if (square == 0 || sign == 0) return out;
    // sqrt(p/q) = sqrt(p*q)/q
    Integer pq = square.get_num() * square.get_den();
    SquareSplit s = split_square(pq);
    out.sign_ = sign > 0 ? 1 : -1;
    out.coeff_ = Rational(s.square_root, square.get_den());
    out.coeff_.canonicalize();
    out.radicand_ = s.free_part;
    return out;
}

Rational SqrtRational::square() const {
    if (sign_ == 0) return 0;
    return coeff_ * coeff_ * radicand_;
}

SqrtRational SqrtRational::operator-() const {
    SqrtRational out = *this;
    out.sign_ = -sign_;
    return out;
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    SqrtRational out;
    out.sign_ = a.sign_ * b.sign_;
    Integer g = gcd(a.radicand_, b.radicand_);
    // sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) for square-free a, b
    out.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
    out.coeff_ = a.coeff_ * b.coeff_ * g;
    return out;
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
    if (b.is_zero()) throw DomainError("division by zero surd");
    SqrtRational inv;
    inv.sign_ = b.sign_;
    inv.radicand_ = b.radicand_;
    inv.coeff_ = 1 / (b.coeff_ * b.radicand_);
    return a * inv;
}

SqrtRational normalize_sqrt(const Rational& raw_square, int sign) {
    return SqrtRational::from_square(raw_square, sign);
}

SqrtRational mul_sqrt(const SqrtRational& a, const SqrtRational& b) { return a * b; }

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw DomainError("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string SqrtRational::to_string() const {
    if (sign_ == 0) return "0";
    return std::string(sign_ < 0 ? "-" : "") + "(" + rational_string(coeff_) + ")*sqrt(" +
           radicand_.get_str() + ")";
}

std::string SqrtRational::to_compact() const {
    if (sign_ == 0) return "0";
    std::string out = (sign_ < 0 ? "-" : "+") + rational_string(coeff_);
    if (radicand_ != 1) out += "*sqrt(" + radicand_.get_str() + ")";
    return out;
}

namespace {

void eval_into(mpfr_t x, int sign, const Rational& coeff, const Integer& rad) {
    mpfr_t c;
    mpfr_init2(c, kPrecisionBits);
    mpfr_set_z(x, rad.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(x, x, MPFR_RNDN);
    mpfr_set_q(c, coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(x, x, c, MPFR_RNDN);
    if (sign < 0) mpfr_neg(x, x, MPFR_RNDN);
    mpfr_clear(c);
}

std::string format_decimal(mpfr_t x, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*RNg", digits, x);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

std::string SqrtRational::to_decimal(int digits) const {
    if (sign_ == 0) return "0";
    mpfr_t x;
    mpfr_init2(x, kPrecisionBits);
    eval_into(x, sign_, coeff_, radicand_);
    std::string out = format_decimal(x, digits);
    mpfr_clear(x);
    return out;
}

double SqrtRational::to_double() const {
    if (sign_ == 0) return 0.0;
    mpfr_t x;
    mpfr_init2(x, kPrecisionBits);
    eval_into(x, sign_, coeff_, radicand_);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

void SurdSum::add(const SqrtRational& v) {
    if (v.is_zero()) return;
    Rational c = v.sign() * v.coeff();
    for (auto& [rad, coeff] : groups_) {
        if (rad == v.radicand()) {
            coeff += c;
            return;
        }
    }
    groups_.emplace_back(v.radicand(), c);
}

bool SurdSum::exact_zero() const {
    return std::all_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.second == 0; });
}

std::string SurdSum::to_decimal(int digits) const {
    mpfr_t acc, term;
    mpfr_init2(acc, kPrecisionBits);
    mpfr_init2(term, kPrecisionBits);
    mpfr_set_zero(acc, 1);
    for (const auto& [rad, coeff] : groups_) {
        eval_into(term, 1, coeff, rad);
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    std::string out = format_decimal(acc, digits);
    mpfr_clear(acc);
    mpfr_clear(term);
    return out;
}

bool surd_sums_equal(const std::vector<SqrtRational>& a, const std::vector<SqrtRational>& b) {
    SurdSum diff, scale;
    for (const auto& v : a) {
        diff.add(v);
        scale.add(v.sign() < 0 ? -v : v);
    }
    for (const auto& v : b) {
        diff.add(-v);
        scale.add(v.sign() < 0 ? -v : v);
    }
    if (diff.exact_zero()) return true;

    mpfr_t d, s, term;
    mpfr_inits2(kPrecisionBits, d, s, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(d, 1);
    mpfr_set_zero(s, 1);
    for (const auto& [rad, coeff] : diff.groups()) {
        eval_into(term, 1, coeff, rad);
        mpfr_add(d, d, term, MPFR_RNDN);
    }
    for (const auto& [rad, coeff] : scale.groups()) {
        eval_into(term, 1, coeff, rad);
        mpfr_add(s, s, term, MPFR_RNDN);
    }
    mpfr_abs(d, d, MPFR_RNDN);
    mpfr_mul_d(s, s, 1e-30, MPFR_RNDN);
    bool equal = mpfr_cmp(d, s) <= 0;
    mpfr_clears(d, s, term, static_cast<mpfr_ptr>(nullptr));
    return equal;
}

}  // namespace gtkit
