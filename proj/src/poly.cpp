#include "gtkit/poly.hpp"

#include <algorithm>
#include <numeric>

namespace gtkit {

namespace {

const Integer& small_factorial(int n) {
    static const std::vector<Integer> table = [] {
        std::vector<Integer> t(256);
        t[0] = 1;
        for (int i = 1; i < 256; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table.at(n);
}

bool graded_greater(const Exponents& a, const Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

SparsePoly SparsePoly::constant(VarShape shape, const Rational& c) {
    SparsePoly p(shape);
    p.add_term(Exponents(shape.arity(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(VarShape shape, int row, int col) {
    SparsePoly p(shape);
    Exponents e(shape.arity(), 0);
    e[shape.index(row, col)] = 1;
    p.add_term(e, 1);
    return p;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != shape_.arity()) throw StructureError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SparsePoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Exponents, Rational>> SparsePoly::sorted_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return graded_greater(a.first, b.first); });
    return out;
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void SparsePoly::check_shape(const SparsePoly& o) const {
    if (!(shape_ == o.shape_)) throw StructureError("polynomial variable shapes differ");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_shape(b);
    SparsePoly out(a.shape_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    Exponents key(a.shape_.arity());
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < key.size(); ++i) {
                unsigned s = unsigned(ea[i]) + eb[i];
                if (s > 255) throw DomainError("exponent overflow in polynomial product");
                key[i] = static_cast<std::uint8_t>(s);
            }
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            auto [it, inserted] = out.terms_.try_emplace(key, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    SparsePoly result = constant(shape_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
        std::string factors;
        for (int i = 0; i < shape_.rows; ++i)
            for (int j = 0; j < shape_.cols; ++j) {
                int p = e[shape_.index(i, j)];
                if (!p) continue;
                if (!factors.empty()) factors += " * ";
                factors += "z[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
                if (p > 1) factors += "^" + std::to_string(p);
            }
        if (constant_term) {
            out += rational_string(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += rational_string(a) + " * " + factors;
        }
    }
    return out;
}

SparsePoly derivative(const SparsePoly& p, int var) {
    SparsePoly out(p.shape());
    for (const auto& [e, c] : p.terms()) {
        if (!e[var]) continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

SparsePoly variable_minor(VarShape shape, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw StructureError("minor needs a square selection");
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    SparsePoly out(shape);
    do {
        int inversions = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        Exponents e(shape.arity(), 0);
        for (size_t c = 0; c < cols.size(); ++c) ++e[shape.index(rows[perm[c]], cols[c])];
        out.add_term(e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SparsePoly substitute_linear(const SparsePoly& p, const std::vector<std::vector<Rational>>& m) {
    const VarShape& sh = p.shape();
    if (static_cast<int>(m.size()) != sh.rows) throw StructureError("substitution matrix size mismatch");
    // image of each variable
    std::vector<SparsePoly> image;
    for (int i = 0; i < sh.rows; ++i)
        for (int j = 0; j < sh.cols; ++j) {
            SparsePoly v(sh);
            for (int k = 0; k < sh.rows; ++k)
                if (m[i][k] != 0) v += SparsePoly::variable(sh, k, j) * m[i][k];
            image.push_back(std::move(v));
        }
    SparsePoly out(sh);
    for (const auto& [e, c] : p.terms()) {
        SparsePoly term = SparsePoly::constant(sh, c);
        for (int v = 0; v < sh.arity(); ++v)
            if (e[v]) term = term * image[v].pow(e[v]);
        out += term;
    }
    return out;
}

Rational inner_product(const SparsePoly& p, const SparsePoly& q) {
    if (!(p.shape() == q.shape())) throw StructureError("inner product of polynomials with different arity");
    const SparsePoly& small = p.size() <= q.size() ? p : q;
    const SparsePoly& large = p.size() <= q.size() ? q : p;
    Rational sum = 0;
    Integer w;
    for (const auto& [e, c] : small.terms()) {
        auto it = large.terms().find(e);
        if (it == large.terms().end()) continue;
        w = 1;
        for (auto v : e)
            if (v > 1) w *= small_factorial(v);
        sum += c * it->second * w;
    }
    return sum;
}

PrimitiveSplit primitive_part(const SparsePoly& p) {
    if (p.is_zero()) return {0, p};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.sorted_terms().front().second < 0) content = -content;
    SparsePoly prim = p * Rational(1 / content);
    return {content, std::move(prim)};
}

NormalizedPoly NormalizedPoly::from(const SparsePoly& raw, const SqrtRational& factor) {
    PrimitiveSplit s = primitive_part(raw);
    if (s.content == 0) return {std::move(s.poly), SqrtRational()};
    return {std::move(s.poly), factor * SqrtRational(s.content)};
}

SqrtRational inner_product(const NormalizedPoly& a, const NormalizedPoly& b) {
    return a.norm_factor * b.norm_factor * SqrtRational(inner_product(a.poly, b.poly));
}

Rational su3_norm_squared(int lambda, int mu, int r, int s, int m) {
    int t2 = mu + r - s;
    Rational q(factorial(lambda + 1) * factorial(t2 + 1),
               factorial(r) * factorial(s) * factorial(mu - s) * factorial(lambda - r) * factorial(mu + r + 1) *
                   factorial(lambda + mu - s + 1));
    q *= Rational(factorial(t2 - m), factorial(t2) * factorial(m));
    q.canonicalize();
    return q;
}

SparsePoly su3_basis_raw(int lambda, int mu, int r, int s, int m, BasisPlacement at) {
    if (lambda < 0 || mu < 0 || r < 0 || r > lambda || s < 0 || s > mu || m < 0 || m > mu + r - s)
        throw DomainError("basis quantum numbers out of range");
    VarShape sh{3, at.cols};
    int c1 = at.first_col, c2 = at.first_col + 1;
    auto one = [&](int i) { return SparsePoly::variable(sh, i, c1); };
    auto two = [&](int i, int j) { return variable_minor(sh, {i, j}, {c1, c2}); };
    SparsePoly d1 = one(0), d2 = one(1), d3 = one(2);
    SparsePoly d23 = two(1, 2), d13 = two(0, 2), d12 = two(0, 1);

    SparsePoly common = d3.pow(lambda - r) * d12.pow(s);
    SparsePoly sum(sh);
    for (int k = std::max(0, m - r); k <= std::min(m, mu - s); ++k) {
        Integer c = binomial(m, k) * factorial(mu - s) * factorial(r) /
                    (factorial(mu - s - k) * factorial(r - (m - k)));
        sum += d1.pow(r - (m - k)) * d2.pow(m - k) * d23.pow(k) * d13.pow(mu - s - k) * Rational(c);
    }
    SparsePoly out = common * sum;
    if (s % 2) out *= Rational(-1);
    return out;
}

NormalizedPoly su3_basis_vector(int lambda, int mu, int r, int s, int m, BasisPlacement at) {
    SparsePoly raw = su3_basis_raw(lambda, mu, r, s, m, at);
    return NormalizedPoly::from(raw, SqrtRational::from_square(su3_norm_squared(lambda, mu, r, s, m)));
}

Degrees homogeneity_degrees(const SparsePoly& p) {
    const VarShape& sh = p.shape();
    Degrees out{std::vector<int>(sh.rows, -1), std::vector<int>(sh.cols, -1)};
    std::vector<std::string> offending;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> row(sh.rows, 0), col(sh.cols, 0);
        for (int i = 0; i < sh.rows; ++i)
            for (int j = 0; j < sh.cols; ++j) {
                row[i] += e[sh.index(i, j)];
                col[j] += e[sh.index(i, j)];
            }
        if (out.row[0] < 0 && (sh.rows > 0)) {
            out.row = row;
            out.column = col;
        } else if (row != out.row || col != out.column) {
            SparsePoly single(sh);
            single.add_term(e, c);
            offending.push_back(single.to_string());
        }
    }
    if (!offending.empty()) {
        std::string msg = "polynomial is not homogeneous; offending monomials:";
        for (const auto& s : offending) msg += " [" + s + "]";
        throw DegreeError(msg);
    }
    if (p.is_zero()) {
        out.row.assign(sh.rows, 0);
        out.column.assign(sh.cols, 0);
    }
    return out;
}

}  // namespace gtkit
