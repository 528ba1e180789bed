#pragma once

#include <map>
#include <optional>
#include <string>

#include "lcsq/ints.hpp"
#include "lcsq/word.hpp"

namespace lcsq {

// Sparse integer combination of words of the free associative algebra.
// Zero coefficients are never stored; term order is degree-major.
class NcPoly {
public:
    NcPoly() = default;

    static NcPoly zero() { return NcPoly{}; }
    static NcPoly unit() { return monomial(Word::unit()); }
    static NcPoly monomial(const Word& w, Int c = 1);
    static NcPoly generator(int32_t i) { return monomial(Word::generator(i)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Int>& terms() const { return terms_; }

    void add_term(const Word& w, const Int& c);

    NcPoly operator+(const NcPoly& rhs) const;
    NcPoly operator-(const NcPoly& rhs) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& rhs) const;
    NcPoly operator*(const Int& c) const;

    NcPoly& operator+=(const NcPoly& rhs);
    NcPoly& operator-=(const NcPoly& rhs);

    // Total degree when every word has the same length.
    std::optional<long> homogeneous_degree() const;
    // Common multidegree when every word has the same exponent vector.
    std::optional<MultiDegree> multihomogeneous_degree(int n) const;

    // Canonical text form, parseable by parse_poly.
    std::string render(int n) const;

    bool operator==(const NcPoly&) const = default;

private:
    std::map<Word, Int> terms_;
};

NcPoly multiply(const NcPoly& p, const NcPoly& q);

// [p, q] = pq - qp.
NcPoly commutator(const NcPoly& p, const NcPoly& q);

// Display name of generator i among n: x,y,z,w for n <= 4, else x1..xn.
std::string var_name(int32_t i, int n);

}  // namespace lcsq
