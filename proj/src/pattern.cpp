#include "gtkit/pattern.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gtkit {

HalfInt HalfInt::parse(const std::string& s) {
    Rational q = parse_rational(s);
    Rational d = 2 * q;
    if (d.get_den() != 1 || !d.get_num().fits_sint_p())
        throw DomainError("not a half-integer: '" + s + "'");
    return from_twice(static_cast<int>(d.get_num().get_si()));
}

std::string HalfInt::to_string() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool IrrepLabel::valid() const {
    if (top_row.empty()) return false;
    if (top_row.back() < 0) return false;
    return std::is_sorted(top_row.begin(), top_row.end(), std::greater<>());
}

IrrepLabel IrrepLabel::conjugate() const {
    IrrepLabel out;
    int top = top_row.front();
    for (auto it = top_row.rbegin(); it != top_row.rend(); ++it) out.top_row.push_back(top - *it);
    return out;
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = static_cast<int>(rows_.size());
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows_[r].size()) != n - r)
            throw StructureError("pattern row " + std::to_string(r + 1) + " has length " +
                                 std::to_string(rows_[r].size()) + ", expected " + std::to_string(n - r));
    }
}

GTPattern GTPattern::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<int> entries;
        std::stringstream es(row);
        std::string e;
        while (std::getline(es, e, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(e, &used);
                if (e.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(e);
                entries.push_back(v);
            } catch (const std::exception&) {
                throw StructureError("bad pattern entry '" + e + "'");
            }
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw StructureError("empty pattern");
    return GTPattern(std::move(rows));
}

int GTPattern::sum() const {
    int s = 0;
    for (const auto& r : rows_)
        for (int v : r) s += v;
    return s;
}

std::string GTPattern::to_string() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ';';
        for (size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(rows_[r][i]);
        }
    }
    return out;
}

std::vector<Violation> validate(const GTPattern& p, Mode mode) {
    std::vector<Violation> out;
    int n = p.n();
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i <= j - 1; ++i) {
            int lower = p.h(i, j - 1);
            if (lower > p.h(i, j))
                out.push_back({i, j - 1, "h(" + std::to_string(i) + "," + std::to_string(j - 1) +
                                             ") exceeds h(" + std::to_string(i) + "," + std::to_string(j) + ")"});
            if (lower < p.h(i + 1, j))
                out.push_back({i, j - 1, "h(" + std::to_string(i) + "," + std::to_string(j - 1) +
                                             ") below h(" + std::to_string(i + 1) + "," + std::to_string(j) + ")"});
        }
    }
    if (n > 0 && p.h(n, n) < 0) out.push_back({n, n, "negative bottom entry of top row"});
    if (mode == Mode::SU && n > 0 && p.h(n, n) != 0) out.push_back({n, n, "h(n,n) must be 0 for SU(n)"});
    return out;
}

std::vector<GTPattern> enumerate_patterns(const IrrepLabel& label) {
    if (!label.valid()) throw DomainError("invalid irrep label");
    int n = label.n();
    std::vector<GTPattern> out;
    std::vector<std::vector<int>> rows{label.top_row};
    // Each lower row interleaves the one above; entries chosen largest first.
    std::function<void(std::vector<int>&, size_t)> fill_row;
    std::function<void()> next_row = [&]() {
        if (static_cast<int>(rows.size()) == n) {
            out.emplace_back(rows);
            return;
        }
        std::vector<int> row(rows.back().size() - 1);
        fill_row(row, 0);
    };
    fill_row = [&](std::vector<int>& row, size_t i) {
        if (i == row.size()) {
            rows.push_back(row);
            next_row();
            rows.pop_back();
            return;
        }
        const std::vector<int> above = rows.back();
        for (int v = above[i]; v >= above[i + 1]; --v) {
            row[i] = v;
            fill_row(row, i + 1);
        }
    };
    next_row();
    return out;
}

Integer dimension(const IrrepLabel& label) {
    if (!label.valid()) throw DomainError("invalid irrep label");
    const auto& h = label.top_row;
    int n = label.n();
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= h[i] - h[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

GTPattern conjugate(const GTPattern& p) {
    if (!validate(p).empty()) throw DomainError("conjugate needs a valid pattern: " + p.to_string());
    int n = p.n();
    if (p.h(n, n) != 0) throw DomainError("conjugate needs an SU(n) pattern (h(n,n) = 0)");
    int top = p.h(1, n);
    std::vector<std::vector<int>> rows(n);
    for (int j = n; j >= 1; --j) {
        auto& row = rows[n - j];
        row.resize(j);
        for (int i = 1; i <= j; ++i) row[i - 1] = top - p.h(j - i + 1, j);
    }
    return GTPattern(std::move(rows));
}

int phase(const GTPattern& p) { return p.sum() - p.h(1, p.n()); }

bool valid_state(const SU3State& s) {
    if (s.lambda < 0 || s.mu < 0) return false;
    int rs3 = s.y + 2 * s.lambda + s.mu;
    if (rs3 % 3 != 0) return false;
    int rps = rs3 / 3;
    int rms = s.t.twice() - s.mu;
    if ((rps + rms) % 2 != 0) return false;
    int r = (rps + rms) / 2, sv = (rps - rms) / 2;
    if (r < 0 || r > s.lambda || sv < 0 || sv > s.mu) return false;
    int tz = s.tz.twice();
    return tz >= -s.t.twice() && tz <= s.t.twice() && (s.t.twice() - tz) % 2 == 0;
}

SU3State su3_from_pattern(const GTPattern& p) {
    if (p.n() != 3) throw DomainError("not an SU(3) pattern: rank " + std::to_string(p.n()));
    if (!validate(p).empty()) throw DomainError("invalid pattern " + p.to_string());
    if (p.h(3, 3) != 0) throw DomainError("not an SU(3) pattern: h(3,3) != 0");
    SU3State s;
    s.lambda = p.h(1, 3) - p.h(2, 3);
    s.mu = p.h(2, 3);
    int row2 = p.h(1, 2) + p.h(2, 2);
    s.t = HalfInt::from_twice(p.h(1, 2) - p.h(2, 2));
    s.tz = HalfInt::from_twice(2 * p.h(1, 1) - row2);
    s.y = 3 * row2 - 2 * (s.lambda + 2 * s.mu);
    return s;
}

GTPattern pattern_from_su3(const SU3State& s) {
    if (!valid_state(s)) throw DomainError("inconsistent SU(3) quantum numbers");
    int row2 = (s.y + 2 * (s.lambda + 2 * s.mu)) / 3;
    int h12 = (row2 + s.t.twice()) / 2;
    int h22 = (row2 - s.t.twice()) / 2;
    int h11 = (s.tz.twice() + row2) / 2;
    return GTPattern({{s.lambda + s.mu, s.mu, 0}, {h12, h22}, {h11}});
}

SU3State subconjugate_su3(const SU3State& s) {
    SU3State out = s;
    out.tz = -s.tz;
    return out;
}

SU3State state_from_index(int lambda, int mu, const SU3Index& idx) {
    SU3State s;
    s.lambda = lambda;
    s.mu = mu;
    int t2 = mu + idx.r - idx.s;
    s.t = HalfInt::from_twice(t2);
    s.tz = HalfInt::from_twice(t2 - 2 * idx.m);
    s.y = -(2 * lambda + mu) + 3 * (idx.r + idx.s);
    if (!valid_state(s) || idx.m < 0 || idx.m > t2) throw DomainError("basis index out of range");
    return s;
}

SU3Index index_from_state(const SU3State& s) {
    if (!valid_state(s)) throw DomainError("inconsistent SU(3) quantum numbers");
    int rps = (s.y + 2 * s.lambda + s.mu) / 3;
    int rms = s.t.twice() - s.mu;
    return {(rps + rms) / 2, (rps - rms) / 2, (s.t.twice() - s.tz.twice()) / 2};
}

std::vector<SU3Index> su3_indices(int lambda, int mu) {
    std::vector<SU3Index> out;
    for (int r = 0; r <= lambda; ++r)
        for (int s = 0; s <= mu; ++s)
            for (int m = 0; m <= mu + r - s; ++m) out.push_back({r, s, m});
    return out;
}

}  // namespace gtkit
