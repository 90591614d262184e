#pragma once

#include "gtkit/exact.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gtkit {

// A half-integer stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }
    // "3", "-1/2"
    static HalfInt parse(const std::string& s);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    Rational value() const { return Rational(twice_, 2); }
    std::string to_string() const;

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

struct IrrepLabel {
    std::vector<int> top_row;  // h_{1n} >= ... >= h_{nn} >= 0

    int n() const { return static_cast<int>(top_row.size()); }
    bool valid() const;
    bool is_su() const { return !top_row.empty() && top_row.back() == 0; }
    // [h_1n - h_nn, ..., h_1n - h_1n]
    IrrepLabel conjugate() const;
    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/*
 * rows[0] is the top row (length n), rows[n-1] holds h_11.
 * Entry rows[n-j][i-1] is h_{i,j}.
 */
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<int>> rows);

    // "2,1,0;2,1;1"
    static GTPattern parse(const std::string& text);

    int n() const { return static_cast<int>(rows_.size()); }
    // 1-based h_{i,j}
    int h(int i, int j) const { return rows_[n() - j][i - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    IrrepLabel label() const { return {rows_.empty() ? std::vector<int>{} : rows_[0]}; }
    int sum() const;

    std::string to_string() const;
    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern& a, const GTPattern& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

struct Violation {
    int i;
    int j;
    std::string message;
};

enum class Mode { U, SU };

std::vector<Violation> validate(const GTPattern& p, Mode mode = Mode::U);
std::vector<GTPattern> enumerate_patterns(const IrrepLabel& label);
Integer dimension(const IrrepLabel& label);
GTPattern conjugate(const GTPattern& p);
int phase(const GTPattern& p);

struct SU3State {
    int lambda = 0;
    int mu = 0;
    HalfInt t;
    HalfInt tz;
    int y = 0;  // three times the hypercharge

    friend bool operator==(const SU3State&, const SU3State&) = default;
};

// Basis index (r, s, m) of the SU(3) polynomial basis.
struct SU3Index {
    int r = 0;
    int s = 0;
    int m = 0;
    friend auto operator<=>(const SU3Index&, const SU3Index&) = default;
};

bool valid_state(const SU3State& s);
SU3State su3_from_pattern(const GTPattern& p);
GTPattern pattern_from_su3(const SU3State& s);
SU3State subconjugate_su3(const SU3State& s);

SU3State state_from_index(int lambda, int mu, const SU3Index& idx);
SU3Index index_from_state(const SU3State& s);
// All (r, s, m) of (lambda, mu), r then s then m ascending.
std::vector<SU3Index> su3_indices(int lambda, int mu);

}  // namespace gtkit
