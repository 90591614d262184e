#pragma once

#include "gtkit/exact.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gtkit {

/*
 * Variables z_i^j laid out as a rows x cols matrix: row i is the vector
 * component, column j picks the vector z^(j). Flat index = i * cols + j.
 */
struct VarShape {
    int rows = 0;
    int cols = 0;
    int arity() const { return rows * cols; }
    int index(int row, int col) const { return row * cols + col; }
    friend bool operator==(const VarShape&, const VarShape&) = default;
};

using Exponents = std::vector<std::uint8_t>;

struct ExponentsHash {
    size_t operator()(const Exponents& e) const noexcept {
        size_t h = 1469598103934665603ull;
        for (auto v : e) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

class SparsePoly {
public:
    using Terms = std::unordered_map<Exponents, Rational, ExponentsHash>;

    SparsePoly() = default;
    explicit SparsePoly(VarShape shape) : shape_(shape) {}

    static SparsePoly constant(VarShape shape, const Rational& c);
    // 0-based row and column
    static SparsePoly variable(VarShape shape, int row, int col);

    const VarShape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);
    Rational coefficient(const Exponents& e) const;

    // Graded lexicographic, highest first.
    std::vector<std::pair<Exponents, Rational>> sorted_terms() const;
    int total_degree() const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly pow(int e) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }

    // "2 * z[1][1]^2 * z[2][1] - z[3][2]" with 1-based indices
    std::string to_string() const;

private:
    void check_shape(const SparsePoly& o) const;

    VarShape shape_;
    Terms terms_;
};

// d/dz for the variable with flat index var.
SparsePoly derivative(const SparsePoly& p, int var);

// Determinant of the square matrix of variables with the given 0-based rows and columns.
SparsePoly variable_minor(VarShape shape, const std::vector<int>& rows, const std::vector<int>& cols);

// z_i^j -> sum_k m[i][k] z_k^j for every column j.
SparsePoly substitute_linear(const SparsePoly& p, const std::vector<std::vector<Rational>>& m);

// Bargmann inner product: <z^a, z^b> = delta_ab * prod a_i!
Rational inner_product(const SparsePoly& p, const SparsePoly& q);

struct PrimitiveSplit {
    Rational content;
    SparsePoly poly;  // integer coefficients, gcd 1, leading term positive
};
PrimitiveSplit primitive_part(const SparsePoly& p);

// norm_factor * poly
struct NormalizedPoly {
    SparsePoly poly;
    SqrtRational norm_factor;

    static NormalizedPoly from(const SparsePoly& raw, const SqrtRational& factor);
};

SqrtRational inner_product(const NormalizedPoly& a, const NormalizedPoly& b);

// Where a basis polynomial lives: two adjacent vector columns of a rows=3 shape.
struct BasisPlacement {
    int cols = 2;
    int first_col = 0;
};

// Square of the norm N(lambda mu; r s m) that makes the basis polynomial unit length.
Rational su3_norm_squared(int lambda, int mu, int r, int s, int m);
// Unnormalized basis polynomial with integer coefficients, including (-1)^s.
SparsePoly su3_basis_raw(int lambda, int mu, int r, int s, int m, BasisPlacement at = {});
NormalizedPoly su3_basis_vector(int lambda, int mu, int r, int s, int m, BasisPlacement at = {});

struct DegreeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct Degrees {
    std::vector<int> row;     // degree in each component z_i over all vectors
    std::vector<int> column;  // degree in each vector z^(j)
};
Degrees homogeneity_degrees(const SparsePoly& p);
inline Degrees homogeneity_degrees(const NormalizedPoly& v) { return homogeneity_degrees(v.poly); }

}  // namespace gtkit
