#include "gtkit/invariants.hpp"

#include "gtkit/coupling.hpp"

#include <numeric>

namespace gtkit {

bool OccupancyComposition::valid() const {
    if (n < 2) return false;
    for (int a : alpha)
        if (a < 0 || a > n - 1) return false;
    return alpha[0] + alpha[1] + alpha[2] == n;
}

std::vector<OccupancyComposition> enumerate_compositions(int n) {
    if (n < 2) throw DomainError("rank must be at least 2");
    std::vector<OccupancyComposition> out;
    for (int a1 = n - 1; a1 >= 0; --a1)
        for (int a2 = std::min(n - 1, n - a1); a2 >= 0; --a2) {
            int a3 = n - a1 - a2;
            if (a3 <= n - 1) out.push_back({n, {a1, a2, a3}});
        }
    return out;
}

std::int64_t count_invariants(int n) {
    if (n < 2) throw DomainError("rank must be at least 2");
    return static_cast<std::int64_t>(n - 1) * (n + 4) / 2;
}

OccupancyComposition InvariantTable::composition() const {
    OccupancyComposition c{n, {0, 0, 0}};
    for (int pos : word.ones()) ++c.alpha[(pos - 1) / (n - 1)];
    return c;
}

std::vector<int> InvariantTable::columns() const {
    std::vector<int> out;
    for (int pos : word.ones()) out.push_back(pos - 1);
    return out;
}

std::string InvariantTable::to_string() const {
    std::string bits = word.to_string(), out;
    for (int g = 0; g < 3; ++g) {
        if (g) out += '|';
        out += bits.substr(g * (n - 1), n - 1);
    }
    return out;
}

InvariantTable canonical_table(const OccupancyComposition& c) {
    if (!c.valid()) throw DomainError("invalid occupancy composition");
    std::vector<bool> bits;
    for (int a : c.alpha)
        for (int b = 0; b < c.n - 1; ++b) bits.push_back(b < a);
    return {c.n, BinaryWord(std::move(bits))};
}

SparsePoly invariant_poly(const InvariantTable& t) {
    if (t.word.length() != 3 * (t.n - 1) || !t.composition().valid())
        throw DomainError("invalid invariant table " + t.to_string());
    std::vector<int> rows(t.n);
    std::iota(rows.begin(), rows.end(), 0);
    return variable_minor(VarShape{t.n, 3 * (t.n - 1)}, rows, t.columns());
}

int KVector::total() const { return std::accumulate(k.begin(), k.end(), 0); }

std::string KVector::to_string() const {
    std::string s = "(";
    for (int i = 0; i < 7; ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

std::array<int, 3> su3_invariant_columns(int i) {
    static constexpr std::array<std::array<int, 3>, 7> cols{{
        {3, 5, 6}, {1, 5, 6}, {1, 2, 5}, {1, 2, 3}, {1, 3, 4}, {3, 4, 5}, {1, 3, 5},
    }};
    if (i < 1 || i > 7) throw DomainError("SU(3) invariant index must be 1..7");
    return cols[i - 1];
}

SparsePoly su3_elementary_invariant(int i) {
    auto c = su3_invariant_columns(i);
    return variable_minor(VarShape{3, 6}, {0, 1, 2}, {c[0] - 1, c[1] - 1, c[2] - 1});
}

std::vector<KVector> solve_k_su3(const SU3Labels& l) {
    std::vector<KVector> out;
    int num = l.lambda1 + l.lambda2 + l.mu3 - (l.mu1 + l.mu2 + l.lambda3);
    if (num < 0 || num % 3 != 0) return out;
    int k7 = num / 3;
    for (int k1 = 0; k1 <= l.lambda3; ++k1) {
        KVector k;
        k(1) = k1;
        k(7) = k7;
        k(2) = l.lambda3 - k1;
        k(4) = l.lambda2 - k7 - k1;
        k(3) = l.mu1 - k(4);
        k(5) = l.lambda1 - k(2) - k7;
        k(6) = l.mu2 - k(5);
        bool nonneg = std::all_of(k.k.begin(), k.k.end(), [](int v) { return v >= 0; });
        if (!nonneg) continue;
        bool system = k(1) + k(2) == l.lambda3 && k(1) + k(4) + k(7) == l.lambda2 &&
                      k(2) + k(5) + k(7) == l.lambda1 && k(3) + k(6) + k(7) == l.mu3 &&
                      k(5) + k(6) == l.mu2 && k(3) + k(4) == l.mu1;
        if (system) out.push_back(k);
    }
    return out;
}

InvariantGelfand gelfand_from_k(const KVector& k) {
    InvariantGelfand h;
    h.h24 = k(3) + k(4) + k(5) + k(6) + k(7);
    h.h34 = k(5) + k(3);
    h.h13 = k.total();
    h.h23 = k(3) + k(4) + k(5) + k(7);
    h.h33 = k(3);
    h.h12 = k(2) + k(3) + k(4) + k(5) + k(7);
    h.h22 = k(3) + k(4);
    return h;
}

KVector k_from_gelfand(const InvariantGelfand& h) {
    KVector k;
    k(1) = (h.h13 - h.h24) - (h.h12 - h.h23);
    k(2) = h.h12 - h.h23;
    k(3) = h.h33;
    k(4) = h.h22 - h.h33;
    k(5) = h.h34 - h.h33;
    k(6) = h.h24 - h.h23;
    k(7) = (h.h23 - h.h34) - (h.h22 - h.h33);
    for (int v : k.k)
        if (v < 0) throw DomainError("not an invariant pattern: negative exponent");
    return k;
}

SU2KVector su2_k_from_pattern(int h12, int h22, int h11) {
    if (!(h12 >= h11 && h11 >= h22 && h22 >= 0)) throw DomainError("need h12 >= h11 >= h22 >= 0");
    return {h22, h11 - h22, h12 - h11};
}

SparsePoly su2_elementary_invariant(int i) {
    static constexpr std::array<std::array<int, 2>, 3> cols{{{0, 1}, {0, 2}, {1, 2}}};
    if (i < 1 || i > 3) throw DomainError("SU(2) invariant index must be 1..3");
    return variable_minor(VarShape{2, 3}, {0, 1}, {cols[i - 1][0], cols[i - 1][1]});
}

SparsePoly build_H_raw(const KVector& k) {
    SparsePoly out = SparsePoly::constant(VarShape{3, 6}, 1);
    for (int v : k.k)
        if (v < 0) throw DomainError("negative invariant exponent");
    for (int i = 1; i <= 7; ++i)
        if (k(i)) out = out * su3_elementary_invariant(i).pow(k(i));
    return out;
}

SparsePoly build_H_raw(const SU2KVector& k) {
    SparsePoly out = SparsePoly::constant(VarShape{2, 3}, 1);
    std::array<int, 3> e{k.k1, k.k2, k.k3};
    for (int i = 0; i < 3; ++i) {
        if (e[i] < 0) throw DomainError("negative invariant exponent");
        if (e[i]) out = out * su2_elementary_invariant(i + 1).pow(e[i]);
    }
    return out;
}

NormalizedPoly build_H(const KVector& k) {
    SqrtRational norm = invariant_norm(k);
    return NormalizedPoly::from(build_H_raw(k), SqrtRational(1) / norm);
}

NormalizedPoly build_H(const SU2KVector& k) {
    return NormalizedPoly::from(build_H_raw(k), SqrtRational(1) / invariant_norm(k));
}

}  // namespace gtkit
