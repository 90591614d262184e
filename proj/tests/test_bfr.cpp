#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkit/bfr.hpp"

using namespace gtkit;

namespace {

std::vector<std::string> words(int n, int m) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_bfr(n, m)) out.push_back(w.to_string());
    return out;
}

}  // namespace

TEST_CASE("words of every weight for SU(4)") {
    CHECK(words(4, 1) == std::vector<std::string>{"1000", "0100", "0010", "0001"});
    CHECK(words(4, 2) == std::vector<std::string>{"1100", "1010", "1001", "0110", "0101", "0011"});
    CHECK(words(4, 3) == std::vector<std::string>{"1110", "1101", "1011", "0111"});
    CHECK(words(4, 4) == std::vector<std::string>{"1111"});
    CHECK(words(2, 1) == std::vector<std::string>{"10", "01"});
    CHECK_THROWS_AS(enumerate_bfr(3, 0), DomainError);
    CHECK_THROWS_AS(enumerate_bfr(3, 4), DomainError);
}

TEST_CASE("complement") {
    CHECK(complement(BinaryWord::parse("100")).to_string() == "011");
    CHECK(complement(BinaryWord::parse("1010")).to_string() == "0101");
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& w : enumerate_bfr(n, m)) {
                CHECK(complement(complement(w)) == w);
                CHECK(complement(w).weight() == n - m);
            }
}

TEST_CASE("parameter monomials of SU(2) and SU(3) words") {
    auto phi = [](const char* w) { return phi_monomial(BinaryWord::parse(w)).to_string(); };
    CHECK(phi("10") == "y(2,1)");
    CHECK(phi("01") == "x(2,1)");
    CHECK(phi("100") == "y(2,1)*y(3,1)");
    CHECK(phi("010") == "x(2,1)*y(3,1)");
    CHECK(phi("001") == "x(3,1)");
    CHECK(phi("110") == "y(3,2)");
    CHECK(phi("101") == "x(3,2)*y(2,1)");
    CHECK(phi("011") == "x(2,1)*x(3,2)");
}

TEST_CASE("complement swaps x and y") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& w : enumerate_bfr(n, m))
                CHECK(phi_monomial(complement(w)) == phi_monomial(w).swapped());
}

TEST_CASE("minor polynomials") {
    SparsePoly d = minor_poly(BinaryWord::parse("11"));
    VarShape s{2, 2};
    CHECK(d == SparsePoly::variable(s, 0, 0) * SparsePoly::variable(s, 1, 1) -
                   SparsePoly::variable(s, 1, 0) * SparsePoly::variable(s, 0, 1));
    CHECK(minor_poly(BinaryWord::parse("010")) == SparsePoly::variable({3, 1}, 1, 0));
    SparsePoly full = minor_poly(BinaryWord::parse("111"));
    CHECK(full.size() == 6);
    int plus = 0;
    for (const auto& [e, c] : full.terms()) plus += c > 0;
    CHECK(plus == 3);
    CHECK(minor_poly(BinaryWord::parse("101"), 1).shape() == VarShape{3, 3});
}

TEST_CASE("minors of equal weight are orthogonal with degree equal to weight") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            auto ws = enumerate_bfr(n, m);
            for (size_t a = 0; a < ws.size(); ++a) {
                SparsePoly pa = minor_poly(ws[a]);
                CHECK(pa.total_degree() == m);
                CHECK(inner_product(pa, pa) == factorial(m));
                for (size_t b = a + 1; b < ws.size(); ++b) CHECK(inner_product(pa, minor_poly(ws[b])) == 0);
            }
        }
}
