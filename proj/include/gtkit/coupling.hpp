#pragma once

#include "gtkit/invariants.hpp"
#include "gtkit/pattern.hpp"

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace gtkit {

struct SU2Triple {
    std::array<HalfInt, 3> j;
    std::array<HalfInt, 3> m;
};

// Wigner 3j symbol from the expansion of the product of the three SU(2) invariants.
SqrtRational su2_3j(const SU2Triple& t);

SqrtRational norm_N2(HalfInt T, HalfInt t1, HalfInt t2, HalfInt t3);
SqrtRational norm_Nv(int lambda, int mu, HalfInt t, int y);

// N_g with the factorial (k1+k2+k7)! in the numerator.
SqrtRational norm_ng_uncorrected(const KVector& k);
// The normalizer that makes prod W^k / (prod k! * N_g) unit length; differs from the uncorrected
// value by sqrt(k1 + k2 + k7 + 1).
SqrtRational norm_ng(const KVector& k);
// || prod W^k ||, requires k3 = k4 = 0
SqrtRational invariant_norm(const KVector& k);
SqrtRational invariant_norm(const SU2KVector& k);

struct SU3Rep {
    int lambda = 0;
    int mu = 0;
    friend auto operator<=>(const SU3Rep&, const SU3Rep&) = default;
};

// Isospin and hypercharge of one state, hypercharge tripled.
struct IsoLabel {
    HalfInt t;
    int y = 0;
    friend auto operator<=>(const IsoLabel&, const IsoLabel&) = default;
};

struct IsoscalarQuery {
    std::array<SU3Rep, 3> rep;
    std::array<IsoLabel, 3> state;
};

struct SelectionZero : std::domain_error {
    using std::domain_error::domain_error;
};

/*
 * Coupling (lambda1 0) x (lambda2 mu2) -> (lambda3 mu3). Coefficients of the unit invariant
 * in the product basis are computed once; the third slot carries the conjugate state.
 */
class SU3Coupling {
public:
    SU3Coupling(SU3Rep r1, SU3Rep r2, SU3Rep r3);

    bool allowed() const { return k_.has_value(); }
    const std::optional<KVector>& k() const { return k_; }
    const std::array<SU3Rep, 3>& reps() const { return rep_; }

    // Wigner coefficient; zero when a selection rule fails.
    SqrtRational wigner(const SU3State& a1, const SU3State& a2, const SU3State& a3) const;
    SqrtRational isoscalar(const IsoLabel& s1, const IsoLabel& s2, const IsoLabel& s3) const;

    // Nonzero isoscalar factors ordered by third, first, second label.
    struct IsoEntry {
        IsoLabel s1, s2, s3;
        SqrtRational value;
    };
    std::vector<IsoEntry> isoscalar_table() const;

    // Wigner coefficient before the global phase, straight from the invariant.
    SqrtRational unphased_wigner(const SU3State& a1, const SU3State& a2, const SU3State& a3) const;
    int global_sign() const { return sign_; }

private:
    using Key = std::tuple<SU3Index, SU3Index, SU3Index>;
    void expand();
    SqrtRational unphased_isoscalar(const IsoLabel& s1, const IsoLabel& s2, const IsoLabel& s3) const;
    std::vector<IsoLabel> iso_labels(const SU3Rep& r) const;

    std::array<SU3Rep, 3> rep_;
    std::optional<KVector> k_;
    std::map<Key, Rational> raw_;
    SqrtRational inv_norm_;
    int sign_ = 1;
};

SqrtRational isoscalar(const IsoscalarQuery& q);
SqrtRational wigner_su3(const IsoscalarQuery& q, HalfInt tz1, HalfInt tz2, HalfInt tz3);
// Closed double sum over the parameter-space expansion, kept for comparison.
SqrtRational isoscalar_double_sum(const IsoscalarQuery& q);

SqrtRational cg_from_3j(const SqrtRational& w, const Integer& d3, int phase);

}  // namespace gtkit
