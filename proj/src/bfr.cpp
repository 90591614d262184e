#include "gtkit/bfr.hpp"

#include <algorithm>

namespace gtkit {

BinaryWord BinaryWord::parse(const std::string& s) {
    std::vector<bool> bits;
    for (char c : s) {
        if (c != '0' && c != '1') throw StructureError("binary word has a non-binary character: '" + s + "'");
        bits.push_back(c == '1');
    }
    if (bits.empty()) throw StructureError("empty binary word");
    return BinaryWord(std::move(bits));
}

int BinaryWord::weight() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<int> BinaryWord::ones() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        if (bits_[i]) out.push_back(i + 1);
    return out;
}

std::string BinaryWord::to_string() const {
    std::string s;
    for (bool b : bits_) s += b ? '1' : '0';
    return s;
}

std::vector<BinaryWord> enumerate_bfr(int n, int m) {
    if (n < 1 || m < 1 || m > n) throw DomainError("weight must lie in 1..n");
    std::vector<bool> bits(n, false);
    std::fill(bits.begin(), bits.begin() + m, true);
    std::vector<BinaryWord> out;
    do {
        out.emplace_back(bits);
    } while (std::prev_permutation(bits.begin(), bits.end()));
    return out;
}

BinaryWord complement(const BinaryWord& w) {
    std::vector<bool> bits = w.bits();
    bits.flip();
    return BinaryWord(std::move(bits));
}

void ParamMonomial::multiply(const ParamSymbol& s, int e) {
    if (e < 0) throw DomainError("negative parameter exponent");
    if (e) factors_[s] += e;
}

ParamMonomial ParamMonomial::swapped() const {
    ParamMonomial out;
    for (const auto& [s, e] : factors_) {
        auto kind = s.kind == ParamSymbol::Kind::X ? ParamSymbol::Kind::Y : ParamSymbol::Kind::X;
        out.multiply({kind, s.lambda, s.lambda - s.mu}, e);
    }
    return out;
}

std::string ParamMonomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : factors_) {
        if (!out.empty()) out += "*";
        out += s.kind == ParamSymbol::Kind::X ? "x(" : "y(";
        out += std::to_string(s.lambda) + "," + std::to_string(s.mu) + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

ParamMonomial phi_monomial(const BinaryWord& w) {
    if (w.length() == 0) throw DomainError("empty binary word");
    ParamMonomial out;
    bool seen_zero = false, seen_one = false;
    int ones_before = 0;
    for (int pos = 1; pos <= w.length(); ++pos) {
        if (w.box(pos)) {
            if (seen_zero) out.multiply({ParamSymbol::Kind::X, pos, ones_before + 1});
            seen_one = true;
            ++ones_before;
        } else {
            if (seen_one) out.multiply({ParamSymbol::Kind::Y, pos, ones_before});
            seen_zero = true;
        }
    }
    return out;
}

SparsePoly minor_poly(const BinaryWord& w, int column_offset) {
    int k = w.weight();
    if (k < 1) throw DomainError("minor needs a word of positive weight");
    std::vector<int> rows, cols;
    for (int pos : w.ones()) rows.push_back(pos - 1);
    for (int c = 0; c < k; ++c) cols.push_back(column_offset + c);
    return variable_minor(VarShape{w.length(), column_offset + k}, rows, cols);
}

}  // namespace gtkit
