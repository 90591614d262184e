#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtkit {

using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Integer factorial(long n);
Integer binomial(long n, long k);

// Splits n > 0 into s^2 * f with f square-free.
struct SquareSplit {
    Integer square_root;
    Integer free_part;
};
SquareSplit split_square(const Integer& n);

/*
 * sign * coeff * sqrt(radicand), radicand a square-free positive integer.
 * Zero is sign 0, coeff 1, radicand 1.
 */
class SqrtRational {
public:
    SqrtRational() = default;
    SqrtRational(long v);
    explicit SqrtRational(const Rational& v);

    // The value with the given square and sign.
    static SqrtRational from_square(const Rational& square, int sign = +1);

    int sign() const { return sign_; }
    const Rational& coeff() const { return coeff_; }
    const Integer& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_rational() const { return radicand_ == 1; }

    Rational square() const;
    // Signed square: sign * value^2.
    Rational signed_square() const { return sign_ * square(); }

    SqrtRational operator-() const;
    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
    friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);
    SqrtRational& operator*=(const SqrtRational& b) { return *this = *this * b; }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign_ == b.sign_ && a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

    // "-(3/2)*sqrt(5)", "0", "(1)*sqrt(1)"
    std::string to_string() const;
    // "+1", "-1/2", "+1/3*sqrt(3)"
    std::string to_compact() const;
    // Correctly rounded decimal with the given significant digits.
    std::string to_decimal(int digits = 15) const;
    double to_double() const;

private:
    int sign_ = 0;
    Rational coeff_ = 1;
    Integer radicand_ = 1;
};

SqrtRational normalize_sqrt(const Rational& raw_square, int sign);
SqrtRational mul_sqrt(const SqrtRational& a, const SqrtRational& b);

std::string rational_string(const Rational& q);
// Parses "3", "-1/2".
Rational parse_rational(const std::string& s);

// Sum of surds. Terms with equal radicand are combined exactly.
class SurdSum {
public:
    void add(const SqrtRational& v);
    bool exact_zero() const;
    // Evaluation at the given number of decimal digits.
    std::string to_decimal(int digits) const;
    const std::vector<std::pair<Integer, Rational>>& groups() const { return groups_; }

private:
    std::vector<std::pair<Integer, Rational>> groups_;
};

// Equality of two surd sums: exact when the difference cancels per radicand,
// otherwise decided at >= 50 significant digits with relative threshold 1e-30.
bool surd_sums_equal(const std::vector<SqrtRational>& a, const std::vector<SqrtRational>& b);

}  // namespace gtkit
