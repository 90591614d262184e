#pragma once

#include "gtkit/poly.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace gtkit {

// Boxes numbered 1..n left to right, printed most-significant box first.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<bool> bits) : bits_(std::move(bits)) {}
    static BinaryWord parse(const std::string& s);

    int length() const { return static_cast<int>(bits_.size()); }
    int weight() const;
    // 1-based box
    bool box(int pos) const { return bits_[pos - 1]; }
    const std::vector<bool>& bits() const { return bits_; }
    // 1-based positions of the ones
    std::vector<int> ones() const;

    std::string to_string() const;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<bool> bits_;
};

std::vector<BinaryWord> enumerate_bfr(int n, int m);
BinaryWord complement(const BinaryWord& w);

struct ParamSymbol {
    enum class Kind { X, Y };
    Kind kind;
    int lambda;
    int mu;
    friend auto operator<=>(const ParamSymbol&, const ParamSymbol&) = default;
};

class ParamMonomial {
public:
    void multiply(const ParamSymbol& s, int e = 1);
    const std::map<ParamSymbol, int>& factors() const { return factors_; }
    // x(l,m) <-> y(l,l-m)
    ParamMonomial swapped() const;
    // "y(2,1)*y(3,1)", "1" when empty
    std::string to_string() const;
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

private:
    std::map<ParamSymbol, int> factors_;
};

ParamMonomial phi_monomial(const BinaryWord& w);

// Minor with rows picked by the ones of w and columns offset .. offset+k-1.
SparsePoly minor_poly(const BinaryWord& w, int column_offset = 0);

}  // namespace gtkit
