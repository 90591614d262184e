#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace oracle {

namespace {

bool fact_arg(int twice, int& out) {
    if (twice < 0 || twice % 2) return false;
    out = twice / 2;
    return true;
}

}  // namespace

SqrtRational racah_3j(int j1, int j2, int j3, int m1, int m2, int m3) {
    if (m1 + m2 + m3 != 0) return {};
    int a, b, c, d;
    if (!fact_arg(j1 + j2 - j3, a) || !fact_arg(j1 - j2 + j3, b) || !fact_arg(-j1 + j2 + j3, c) ||
        !fact_arg(j1 + j2 + j3 + 2, d))
        return {};
    std::array<int, 6> pm;
    int js[3] = {j1, j2, j3}, ms[3] = {m1, m2, m3};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(ms[i]) > js[i]) return {};
        if (!fact_arg(js[i] + ms[i], pm[2 * i]) || !fact_arg(js[i] - ms[i], pm[2 * i + 1])) return {};
    }
    Rational pre(factorial(a) * factorial(b) * factorial(c), factorial(d));
    for (int v : pm) pre *= factorial(v);
    pre.canonicalize();
    Rational sum = 0;
    for (int t = 0; t <= 200; ++t) {
        int den2[6] = {2 * t, j3 - j2 + 2 * t + m1, j3 - j1 + 2 * t - m2, j1 + j2 - j3 - 2 * t, j1 - 2 * t - m1,
                       j2 - 2 * t + m2};
        Integer den = 1;
        bool ok = true;
        for (int x : den2) {
            int f;
            if (!fact_arg(x, f)) {
                ok = false;
                break;
            }
            den *= factorial(f);
        }
        if (ok) sum += Rational(t % 2 ? -1 : 1, den);
    }
    if (sum == 0) return {};
    int ph2 = j1 - j2 - m3;
    int phase = (ph2 / 2) % 2 == 0 ? 1 : -1;
    return SqrtRational(phase * sum) * SqrtRational::from_square(pre);
}

SqrtRational racah_cg(int j1, int m1, int j2, int m2, int J, int M) {
    if (m1 + m2 != M) return {};
    int a, b, c, d;
    if (!fact_arg(J + j1 - j2, a) || !fact_arg(J - j1 + j2, b) || !fact_arg(j1 + j2 - J, c) ||
        !fact_arg(j1 + j2 + J + 2, d))
        return {};
    int f[6];
    if (!fact_arg(J + M, f[0]) || !fact_arg(J - M, f[1]) || !fact_arg(j1 - m1, f[2]) || !fact_arg(j1 + m1, f[3]) ||
        !fact_arg(j2 - m2, f[4]) || !fact_arg(j2 + m2, f[5]))
        return {};
    Rational pre(Integer(J + 1) * factorial(a) * factorial(b) * factorial(c), factorial(d));
    for (int v : f) pre *= factorial(v);
    pre.canonicalize();
    Rational sum = 0;
    for (int k = 0; k <= 200; ++k) {
        int den2[6] = {2 * k, j1 + j2 - J - 2 * k, j1 - m1 - 2 * k, j2 + m2 - 2 * k, J - j2 + m1 + 2 * k,
                       J - j1 - m2 + 2 * k};
        Integer den = 1;
        bool ok = true;
        for (int x : den2) {
            int v;
            if (!fact_arg(x, v)) {
                ok = false;
                break;
            }
            den *= factorial(v);
        }
        if (ok) sum += Rational(k % 2 ? -1 : 1, den);
    }
    if (sum == 0) return {};
    return SqrtRational(sum) * SqrtRational::from_square(pre);
}

namespace {

using Weight = std::array<int, 3>;

std::map<Weight, int> weights(int l, int m) {
    std::map<Weight, int> w;
    for (int h12 = m; h12 <= l + m; ++h12)
        for (int h22 = 0; h22 <= m; ++h22)
            for (int h11 = h22; h11 <= h12; ++h11) ++w[{h11, h12 + h22 - h11, l + 2 * m - h12 - h22}];
    return w;
}

}  // namespace

int su3_multiplicity(int l1, int m1, int l2, int m2, int l3, int m3) {
    auto wa = weights(l1, m1), wb = weights(l2, m2);
    std::map<Weight, int> prod;
    for (const auto& [x, cx] : wa)
        for (const auto& [y, cy] : wb) prod[{x[0] + y[0], x[1] + y[1], x[2] + y[2]}] += cx * cy;
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    int found = 0;
    while (!prod.empty()) {
        Weight hw = std::max_element(prod.begin(), prod.end(), [](const auto& a, const auto& b) {
                        return std::pair(a.first[0], a.first[1]) < std::pair(b.first[0], b.first[1]);
                    })->first;
        int l = hw[0] - hw[1], m = hw[1] - hw[2], n = prod[hw];
        if (l == l3 && m == m3) found += n;
        for (const auto& [w, c] : weights(l, m)) {
            Weight s{w[0] + hw[2], w[1] + hw[2], w[2] + hw[2]};
            if ((prod[s] -= c * n) == 0) prod.erase(s);
        }
    }
    return found;
}

long brute_force_compositions(int n) {
    long count = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int c = 0; c <= n; ++c)
                if (a + b + c == n && a <= n - 1 && b <= n - 1 && c <= n - 1) ++count;
    return count;
}

SU3Index conjugate_index(int lambda, int mu, const SU3Index& i) {
    return {mu - i.s, lambda - i.r, (mu + i.r - i.s) - i.m};
}

ZSpaceCoupling zspace_coupling(SU3Rep r1, SU3Rep r2, SU3Rep r3) {
    auto ks = solve_k_su3({r1.lambda, r1.mu, r2.lambda, r2.mu, r3.lambda, r3.mu});
    ZSpaceCoupling out;
    if (ks.size() != 1) return out;
    out.k = ks.front();
    SparsePoly H = build_H_raw(out.k);
    Rational hh = inner_product(H, H);

    struct Basis {
        SU3Index idx;
        SparsePoly poly;
        Rational norm2;
    };
    auto basis = [](SU3Rep r, int col) {
        std::vector<Basis> b;
        for (const auto& i : su3_indices(r.lambda, r.mu))
            b.push_back({i, su3_basis_raw(r.lambda, r.mu, i.r, i.s, i.m, {6, col}),
                         su3_norm_squared(r.lambda, r.mu, i.r, i.s, i.m)});
        return b;
    };
    auto b1 = basis(r1, 0), b2 = basis(r2, 2), b3 = basis({r3.mu, r3.lambda}, 4);
    for (const auto& x : b1)
        for (const auto& y : b2) {
            SparsePoly xy = x.poly * y.poly;
            for (const auto& z : b3) {
                Rational c = inner_product(xy * z.poly, H);
                if (c == 0) continue;
                out.coeff[{x.idx, y.idx, z.idx}] =
                    SqrtRational(c) * SqrtRational::from_square(x.norm2 * y.norm2 * z.norm2 / hh);
            }
        }
    return out;
}

}  // namespace oracle
