#include "gtkit/coupling.hpp"

#include <algorithm>

namespace gtkit {

namespace {

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

Rational fact_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
    Integer n = 1, d = 1;
    for (int v : num) n *= factorial(v);
    for (int v : den) d *= factorial(v);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

SqrtRational su2_3j(const SU2Triple& t) {
    std::array<int, 3> j2, m2;
    for (int i = 0; i < 3; ++i) {
        j2[i] = t.j[i].twice();
        m2[i] = t.m[i].twice();
        if (j2[i] < 0) throw DomainError("negative angular momentum");
    }
    if (m2[0] + m2[1] + m2[2] != 0) return {};
    int T2 = j2[0] + j2[1] + j2[2];
    if (T2 % 2) return {};
    int T = T2 / 2;
    std::array<int, 3> a, jp, jm;
    for (int i = 0; i < 3; ++i) {
        a[i] = T - j2[i];
        if (a[i] < 0) return {};
        if ((j2[i] + m2[i]) % 2 || std::abs(m2[i]) > j2[i]) return {};
        jp[i] = (j2[i] + m2[i]) / 2;
        jm[i] = (j2[i] - m2[i]) / 2;
    }
    Integer sum = 0;
    for (int r = 0; r <= a[2]; ++r) {
        int q = jp[0] - a[2] + r;
        int p = a[0] + r - jp[1];
        if (q < 0 || q > a[1] || p < 0 || p > a[0]) continue;
        sum += parity_sign(p + q + r) * binomial(a[0], p) * binomial(a[1], q) * binomial(a[2], r);
    }
    if (sum == 0) return {};
    Rational sq = fact_ratio({jp[0], jm[0], jp[1], jm[1], jp[2], jm[2]}, {T + 1, a[0], a[1], a[2]});
    return SqrtRational(Rational(sum)) * SqrtRational::from_square(sq);
}

SqrtRational norm_N2(HalfInt T, HalfInt t1, HalfInt t2, HalfInt t3) {
    if (T != t1 + t2 + t3 || !T.is_integer()) throw DomainError("T must be the integral sum t1 + t2 + t3");
    int Ti = T.twice() / 2;
    std::array<int, 3> a{Ti - t1.twice(), Ti - t2.twice(), Ti - t3.twice()};
    for (int v : a)
        if (v < 0) throw SelectionZero("triangle condition fails: negative factorial argument");
    return SqrtRational::from_square(fact_ratio({Ti + 1, a[0], a[1], a[2]}, {}));
}

SqrtRational norm_Nv(int lambda, int mu, HalfInt t, int y) {
    SU3State s{lambda, mu, t, t, y};
    if (!valid_state(s)) throw DomainError("invalid SU(3) state for N_v");
    SU3Index idx = index_from_state(s);
    int r = idx.r, sv = idx.s, t2 = t.twice();
    Rational sq = fact_ratio({lambda + 1, t2 + 1},
                             {r, sv, mu - sv, lambda - r, mu + r + 1, lambda + mu - sv + 1});
    return SqrtRational::from_square(sq) * SqrtRational(Rational(factorial(t2)));
}

namespace {

void require_mu1_family(const KVector& k) {
    if (k(3) != 0 || k(4) != 0) throw DomainError("normalization is only available for k3 = k4 = 0");
    for (int v : k.k)
        if (v < 0) throw DomainError("negative invariant exponent");
}

}  // namespace

SqrtRational norm_ng_uncorrected(const KVector& k) {
    require_mu1_family(k);
    int P = k.total();
    Rational sq = fact_ratio({P + 2, k(1) + k(2) + k(7), k(1) + k(6) + k(7) + 1, k(5) + k(6) + k(7) + 1},
                             {k(7), k(1), k(2), k(5), k(6), k(1) + k(7) + 1, k(6) + k(7) + 1}) /
                  2;
    return SqrtRational::from_square(sq);
}

SqrtRational norm_ng(const KVector& k) {
    require_mu1_family(k);
    int P = k.total();
    Rational sq = fact_ratio({P + 2, k(1) + k(2) + k(7) + 1, k(1) + k(6) + k(7) + 1, k(5) + k(6) + k(7) + 1},
                             {k(7), k(1), k(2), k(5), k(6), k(1) + k(7) + 1, k(6) + k(7) + 1}) /
                  2;
    return SqrtRational::from_square(sq);
}

SqrtRational invariant_norm(const KVector& k) {
    Integer f = 1;
    for (int v : k.k) f *= factorial(v);
    return SqrtRational(Rational(f)) * norm_ng(k);
}

SqrtRational invariant_norm(const SU2KVector& k) {
    if (k.k1 < 0 || k.k2 < 0 || k.k3 < 0) throw DomainError("negative invariant exponent");
    return SqrtRational::from_square(fact_ratio({k.k1 + k.k2 + k.k3 + 1, k.k1, k.k2, k.k3}, {}));
}

/*
 * Slot variables for the expansion, flat indices in a 1 x 10 shape:
 * doublet d1 = (0,1); slot 2 doublets d2 = (2,3), D2 = (4,5); slot 3 d3 = (6,7), D3 = (8,9).
 */
namespace {

constexpr VarShape kSlotShape{1, 10};
constexpr int kd1 = 0, kd2 = 2, kD2 = 4, kd3 = 6, kD3 = 8;

SparsePoly slot_var(int i) { return SparsePoly::variable(kSlotShape, 0, i); }

// [ab] = a_0 b_1 - a_1 b_0
SparsePoly bracket(int a, int b) { return slot_var(a) * slot_var(b + 1) - slot_var(a + 1) * slot_var(b); }

// Cayley Omega on the doublet pair (a, b).
SparsePoly omega(const SparsePoly& p, int a, int b) {
    return derivative(derivative(p, a), b + 1) - derivative(derivative(p, a + 1), b);
}

// Substitute b := a.
SparsePoly identify(const SparsePoly& p, int a, int b) {
    SparsePoly out(p.shape());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        f[a] += f[b];
        f[a + 1] += f[b + 1];
        f[b] = f[b + 1] = 0;
        out.add_term(f, c);
    }
    return out;
}

Rational omega_scale(int a, int b, int p) {
    return fact_ratio({p, a + b - p + 1}, {a + b - 2 * p + 1});
}

}  // namespace

SU3Coupling::SU3Coupling(SU3Rep r1, SU3Rep r2, SU3Rep r3) : rep_{r1, r2, r3} {
    for (const auto& r : rep_)
        if (r.lambda < 0 || r.mu < 0) throw DomainError("negative SU(3) label");
    if (r1.mu != 0) throw DomainError("only couplings with mu1 = 0 are supported");
    auto ks = solve_k_su3({r1.lambda, r1.mu, r2.lambda, r2.mu, r3.lambda, r3.mu});
    if (ks.size() > 1) throw DomainError("coupling has multiplicity > 1");
    if (ks.empty()) return;
    k_ = ks.front();
    inv_norm_ = invariant_norm(*k_);
    expand();

    // Phase: reference entry at the highest weight of the third irrep, preferring
    // maximal t1, then t2, then y1.
    IsoLabel top{HalfInt::from_twice(r3.lambda), r3.lambda + 2 * r3.mu};
    auto l1 = iso_labels(r1), l2 = iso_labels(r2);
    std::vector<std::pair<IsoLabel, IsoLabel>> pairs;
    for (const auto& a : l1)
        for (const auto& b : l2)
            if (a.y + b.y == top.y) pairs.emplace_back(a, b);
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        return std::tuple(p.first.t, p.second.t, p.first.y) > std::tuple(q.first.t, q.second.t, q.first.y);
    });
    for (const auto& [a, b] : pairs) {
        SqrtRational v = unphased_isoscalar(a, b, top);
        if (!v.is_zero()) {
            sign_ = v.sign();
            break;
        }
    }
}

void SU3Coupling::expand() {
    const KVector& k = *k_;
    const int l1 = rep_[0].lambda, l2 = rep_[1].lambda, m2 = rep_[1].mu;
    const int l3 = rep_[2].lambda, m3 = rep_[2].mu;
    const int k1 = k(1), k2 = k(2), k5 = k(5), k6 = k(6), k7 = k(7);

    for (int i = 0; i <= k5; ++i)
        for (int j = 0; j <= k2; ++j)
            for (int kk = 0; kk <= k1; ++kk)
                for (int l = 0; l <= k6; ++l)
                    for (int m = 0; m <= k7; ++m)
                        for (int n = 0; n <= k7 - m; ++n) {
                            int o = k7 - m - n;
                            int r1 = i + j + n + o;
                            if (r1 > l1) continue;
                            int a2 = kk + m + o, b2 = i + l, E2 = k1 - kk + n, S2 = (k5 - i) + (k6 - l);
                            int a3 = l + m + n, b3 = j + kk, E3 = (k6 - l) + o, S3 = (k2 - j) + (k1 - kk);
                            // Slot degree bookkeeping; p counts the Omega contractions.
                            if (a2 + E2 != l2 || b2 + S2 != m2) continue;
                            if (a3 + E3 != m3 || b3 + S3 != l3) continue;

                            Rational coef = Rational(binomial(k5, i) * binomial(k2, j) * binomial(k1, kk) *
                                                     binomial(k6, l)) *
                                            fact_ratio({k7}, {m, n, o});
                            SparsePoly B = bracket(kd1, kD2).pow(i) * bracket(kd1, kD3).pow(j) *
                                           bracket(kd2, kD3).pow(kk) * bracket(kd3, kD2).pow(l) *
                                           bracket(kd2, kd3).pow(m) * bracket(kd1, kd3).pow(n) *
                                           bracket(kd1, kd2).pow(o);

                            SparsePoly B2 = B;
                            for (int p2 = 0; p2 <= std::min(a2, b2); ++p2) {
                                if (p2) B2 = omega(B2, kd2, kD2);
                                if (B2.is_zero()) break;
                                int r2 = a2 - p2, s2 = S2 + p2;
                                if (r2 > l2 || s2 > m2) continue;
                                SparsePoly B3 = B2;
                                for (int p3 = 0; p3 <= std::min(a3, b3); ++p3) {
                                    if (p3) B3 = omega(B3, kd3, kD3);
                                    if (B3.is_zero()) break;
                                    int r3 = a3 - p3, s3 = S3 + p3;
                                    if (r3 > m3 || s3 > l3) continue;
                                    SparsePoly R = identify(identify(B3, kd2, kD2), kd3, kD3);
                                    Rational scale = coef * parity_sign(n + p2 + p3 + s2 + s3) /
                                                     (omega_scale(a2, b2, p2) * omega_scale(a3, b3, p3));
                                    int t22 = r2 + m2 - s2, t32 = r3 + l3 - s3;
                                    for (const auto& [e, c] : R.terms()) {
                                        int q1 = e[kd1 + 1], q2 = e[kd2 + 1], q3 = e[kd3 + 1];
                                        if (e[kd1] != r1 - q1 || e[kd2] != t22 - q2 || e[kd3] != t32 - q3)
                                            throw std::logic_error("slot normal form has an unexpected degree");
                                        Rational conv = fact_ratio({r1 - q1, t22 - q2, t32 - q3}, {r1, t22, t32});
                                        Key key{SU3Index{r1, 0, q1}, SU3Index{r2, s2, q2}, SU3Index{r3, s3, q3}};
                                        raw_[key] += scale * c * conv;
                                    }
                                }
                            }
                        }
    std::erase_if(raw_, [](const auto& kv) { return kv.second == 0; });
}

SqrtRational SU3Coupling::unphased_wigner(const SU3State& a1, const SU3State& a2, const SU3State& a3) const {
    const std::array<const SU3State*, 3> st{&a1, &a2, &a3};
    for (int i = 0; i < 3; ++i)
        if (st[i]->lambda != rep_[i].lambda || st[i]->mu != rep_[i].mu || !valid_state(*st[i]))
            throw DomainError("state does not belong to the coupled irrep");
    if (!k_) return {};
    if (a1.y + a2.y != a3.y || a1.tz + a2.tz != a3.tz) return {};
    SU3Index i1 = index_from_state(a1), i2 = index_from_state(a2), i3 = index_from_state(a3);
    const int l3 = rep_[2].lambda, m3 = rep_[2].mu;
    SU3Index c3{m3 - i3.s, l3 - i3.r, (a3.t.twice()) - i3.m};
    auto it = raw_.find(Key{i1, i2, c3});
    if (it == raw_.end()) return {};
    Rational n2 = su3_norm_squared(rep_[0].lambda, rep_[0].mu, i1.r, i1.s, i1.m) *
                  su3_norm_squared(rep_[1].lambda, rep_[1].mu, i2.r, i2.s, i2.m) *
                  su3_norm_squared(m3, l3, c3.r, c3.s, c3.m);
    return SqrtRational(it->second) / (SqrtRational::from_square(n2) * inv_norm_);
}

SqrtRational SU3Coupling::wigner(const SU3State& a1, const SU3State& a2, const SU3State& a3) const {
    SqrtRational w = unphased_wigner(a1, a2, a3);
    return sign_ < 0 ? -w : w;
}

std::vector<IsoLabel> SU3Coupling::iso_labels(const SU3Rep& r) const {
    std::vector<IsoLabel> out;
    for (const auto& idx : su3_indices(r.lambda, r.mu)) {
        if (idx.m != 0) continue;
        SU3State s = state_from_index(r.lambda, r.mu, idx);
        out.push_back({s.t, s.y});
    }
    std::sort(out.begin(), out.end(), [](const IsoLabel& a, const IsoLabel& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SqrtRational SU3Coupling::unphased_isoscalar(const IsoLabel& s1, const IsoLabel& s2, const IsoLabel& s3) const {
    const std::array<const IsoLabel*, 3> st{&s1, &s2, &s3};
    for (int i = 0; i < 3; ++i) {
        SU3State probe{rep_[i].lambda, rep_[i].mu, st[i]->t, st[i]->t, st[i]->y};
        if (!valid_state(probe)) throw DomainError("isospin/hypercharge label not in irrep");
    }
    if (!k_ || s1.y + s2.y != s3.y) return {};
    Integer d3 = dimension(IrrepLabel{{rep_[2].lambda + rep_[2].mu, rep_[2].mu, 0}});
    SqrtRational reduce = SqrtRational::from_square(Rational(s3.t.twice() + 1, d3));
    for (int tz1 = -s1.t.twice(); tz1 <= s1.t.twice(); tz1 += 2)
        for (int tz2 = -s2.t.twice(); tz2 <= s2.t.twice(); tz2 += 2) {
            int tz3 = tz1 + tz2;
            if (std::abs(tz3) > s3.t.twice()) continue;
            HalfInt z1 = HalfInt::from_twice(tz1), z2 = HalfInt::from_twice(tz2), z3 = HalfInt::from_twice(tz3);
            SqrtRational threej = su2_3j({{s1.t, s2.t, s3.t}, {z1, z2, -z3}});
            if (threej.is_zero()) continue;
            SqrtRational w = unphased_wigner({rep_[0].lambda, rep_[0].mu, s1.t, z1, s1.y},
                                             {rep_[1].lambda, rep_[1].mu, s2.t, z2, s2.y},
                                             {rep_[2].lambda, rep_[2].mu, s3.t, z3, s3.y});
            return w / (threej * reduce);
        }
    return {};
}

SqrtRational SU3Coupling::isoscalar(const IsoLabel& s1, const IsoLabel& s2, const IsoLabel& s3) const {
    SqrtRational v = unphased_isoscalar(s1, s2, s3);
    return sign_ < 0 ? -v : v;
}

std::vector<SU3Coupling::IsoEntry> SU3Coupling::isoscalar_table() const {
    std::vector<IsoEntry> out;
    if (!k_) return out;
    auto l1 = iso_labels(rep_[0]), l2 = iso_labels(rep_[1]), l3 = iso_labels(rep_[2]);
    for (const auto& c : l3)
        for (const auto& a : l1)
            for (const auto& b : l2) {
                if (a.y + b.y != c.y) continue;
                SqrtRational v = isoscalar(a, b, c);
                if (!v.is_zero()) out.push_back({a, b, c, v});
            }
    return out;
}

SqrtRational isoscalar(const IsoscalarQuery& q) {
    SU3Coupling c(q.rep[0], q.rep[1], q.rep[2]);
    return c.isoscalar(q.state[0], q.state[1], q.state[2]);
}

SqrtRational wigner_su3(const IsoscalarQuery& q, HalfInt tz1, HalfInt tz2, HalfInt tz3) {
    SU3Coupling c(q.rep[0], q.rep[1], q.rep[2]);
    std::array<HalfInt, 3> tz{tz1, tz2, tz3};
    std::array<SU3State, 3> st;
    for (int i = 0; i < 3; ++i) {
        st[i] = {q.rep[i].lambda, q.rep[i].mu, q.state[i].t, tz[i], q.state[i].y};
        if (!valid_state(st[i])) throw DomainError("state " + std::to_string(i + 1) + " not in irrep");
    }
    return c.wigner(st[0], st[1], st[2]);
}

SqrtRational isoscalar_double_sum(const IsoscalarQuery& q) {
    if (q.rep[0].mu != 0) throw DomainError("only couplings with mu1 = 0 are supported");
    auto ks = solve_k_su3({q.rep[0].lambda, 0, q.rep[1].lambda, q.rep[1].mu, q.rep[2].lambda, q.rep[2].mu});
    if (ks.empty()) return {};
    const KVector& k = ks.front();
    const auto& s = q.state;
    HalfInt T = s[0].t + s[1].t + s[2].t;
    if (!T.is_integer() || s[0].y + s[1].y != s[2].y) return {};
    SqrtRational n2;
    try {
        n2 = norm_N2(T, s[0].t, s[1].t, s[2].t);
    } catch (const SelectionZero&) {
        return {};
    }
    // Third slot evaluated in the conjugate irrep with the conjugate label.
    SU3Rep c3{q.rep[2].mu, q.rep[2].lambda};
    GTPattern h2 = pattern_from_su3({q.rep[1].lambda, q.rep[1].mu, s[1].t, s[1].t, s[1].y});
    GTPattern h3 = pattern_from_su3({c3.lambda, c3.mu, s[2].t, s[2].t, -s[2].y});
    int d2 = h2.h(2, 3) - h2.h(2, 2), d3 = h3.h(2, 3) - h3.h(2, 2);
    int e2 = h2.h(1, 3) - h2.h(1, 2), e3 = h3.h(1, 3) - h3.h(1, 2);
    Rational sum = 0;
    for (int i = 0; i <= k(5); ++i)
        for (int j = 0; j <= k(2); ++j) {
            int l = d2 - i;
            int m = e3 + d2 - i - k(6);
            int kk = d3 - j;
            int n = e2 + d3 - j + k(1);
            std::array<int, 11> args{i, k(5) - i, j, k(2) - j, kk, k(1) - kk, l, k(6) - l, m, n, k(7) - m - n};
            if (std::any_of(args.begin(), args.end(), [](int v) { return v < 0; })) continue;
            Integer den = 1;
            for (int v : args) den *= factorial(v);
            sum += Rational(parity_sign(l + n), den);
        }
    if (sum == 0) return {};
    SqrtRational nv = norm_Nv(q.rep[0].lambda, q.rep[0].mu, s[0].t, s[0].y) *
                      norm_Nv(q.rep[1].lambda, q.rep[1].mu, s[1].t, s[1].y) *
                      norm_Nv(c3.lambda, c3.mu, s[2].t, -s[2].y);
    return SqrtRational(Rational(parity_sign(T.twice() / 2)) * sum) * n2 / nv;
}

SqrtRational cg_from_3j(const SqrtRational& w, const Integer& d3, int phase) {
    SqrtRational v = w * SqrtRational::from_square(Rational(d3));
    return parity_sign(phase) < 0 ? -v : v;
}

}  // namespace gtkit
