#pragma once

#include "gtkit/bfr.hpp"
#include "gtkit/poly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gtkit {

struct OccupancyComposition {
    int n = 0;
    std::array<int, 3> alpha{};
    bool valid() const;
    friend bool operator==(const OccupancyComposition&, const OccupancyComposition&) = default;
};

// Descending lexicographic order.
std::vector<OccupancyComposition> enumerate_compositions(int n);
std::int64_t count_invariants(int n);

// A word of 3(n-1) boxes split into three groups of n-1.
struct InvariantTable {
    int n = 0;
    BinaryWord word;

    OccupancyComposition composition() const;
    // 0-based global columns of the ones, ascending.
    std::vector<int> columns() const;
    // "100|111|000"
    std::string to_string() const;
};

InvariantTable canonical_table(const OccupancyComposition& c);
// Determinant of the selected vectors, columns in ascending order, in a shape {n, 3(n-1)}.
SparsePoly invariant_poly(const InvariantTable& t);

// Exponents of the seven SU(3) elementary invariants.
struct KVector {
    std::array<int, 7> k{};
    // 1-based
    int operator()(int i) const { return k[i - 1]; }
    int& operator()(int i) { return k[i - 1]; }
    int total() const;
    std::string to_string() const;
    friend auto operator<=>(const KVector&, const KVector&) = default;
};

// Vector columns (1-based) of the invariant carrying exponent k_i.
std::array<int, 3> su3_invariant_columns(int i);
SparsePoly su3_elementary_invariant(int i);

struct SU3Labels {
    int lambda1 = 0, mu1 = 0, lambda2 = 0, mu2 = 0, lambda3 = 0, mu3 = 0;
};

// Solutions ordered by increasing k1; empty when forbidden.
std::vector<KVector> solve_k_su3(const SU3Labels& l);

struct InvariantGelfand {
    int h13 = 0, h24 = 0, h34 = 0, h23 = 0, h33 = 0, h12 = 0, h22 = 0;
    friend bool operator==(const InvariantGelfand&, const InvariantGelfand&) = default;
};

InvariantGelfand gelfand_from_k(const KVector& k);
KVector k_from_gelfand(const InvariantGelfand& h);

struct SU2KVector {
    int k1 = 0, k2 = 0, k3 = 0;
    friend bool operator==(const SU2KVector&, const SU2KVector&) = default;
};

SU2KVector su2_k_from_pattern(int h12, int h22, int h11);
SparsePoly su2_elementary_invariant(int i);

SparsePoly build_H_raw(const KVector& k);
SparsePoly build_H_raw(const SU2KVector& k);
// Unit-norm invariant; SU(3) requires k3 = k4 = 0.
NormalizedPoly build_H(const KVector& k);
NormalizedPoly build_H(const SU2KVector& k);

}  // namespace gtkit
