#include "lcsq/abgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lcsq {

AbGroup::AbGroup(long rank, std::vector<Int> invariant_factors)
    : rank_(rank), factors_(std::move(invariant_factors)) {
    if (rank_ < 0) throw std::invalid_argument("negative rank");
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be at least 2");
        if (i > 0 && !int_divisible(factors_[i], factors_[i - 1]))
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
}

AbGroup AbGroup::cyclic(const Int& d) {
    Int a = int_abs(d);
    if (a <= 1) return trivial();
    return AbGroup(0, {a});
}

Int AbGroup::torsion_order() const {
    Int t = 1;
    for (const Int& d : factors_) t *= d;
    return t;
}

std::string AbGroup::format() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << "Z";
        if (rank_ > 1) os << "^" << rank_;
        first = false;
    }
    for (const Int& d : factors_) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

std::string AbGroup::format_primes() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << "Z";
        if (rank_ > 1) os << "^" << rank_;
        first = false;
    }
    std::map<Int, unsigned> counts;  // prime power -> multiplicity
    for (const Int& d : factors_)
        for (const auto& [p, e] : factorize(d)) ++counts[int_pow(p, e)];
    for (const auto& [q, k] : counts) {
        if (!first) os << " + ";
        if (k == 1)
            os << "Z/" << q.get_str();
        else
            os << "(Z/" << q.get_str() << ")^" << k;
        first = false;
    }
    return os.str();
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    n = int_abs(n);
    if (n <= 1) return out;
    Int p = 2;
    while (p * p <= n) {
        if (int_divisible(n, p)) {
            unsigned e = 0;
            while (int_divisible(n, p)) {
                n = int_divexact(n, p);
                ++e;
            }
            out.emplace_back(p, e);
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    // merge prime-power decompositions, then rebuild the divisibility chain
    std::map<Int, std::vector<unsigned>> exps;  // prime -> exponents, ascending
    for (const AbGroup* g : {&a, &b})
        for (const Int& d : g->invariant_factors())
            for (const auto& [p, e] : factorize(d)) exps[p].push_back(e);
    size_t layers = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end());
        layers = std::max(layers, es.size());
    }
    std::vector<Int> chain(layers, Int(1));
    for (const auto& [p, es] : exps)
        for (size_t i = 0; i < es.size(); ++i)
            chain[layers - es.size() + i] *= int_pow(p, es[i]);
    return AbGroup(a.rank() + b.rank(), std::move(chain));
}

AbGroup lattice_quotient(const IntLattice& u, const IntLattice& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("lattice_quotient: ambient dimensions differ");
    HnfBuilder coords_hnf(u.rank());
    for (const RowVec& row : v.basis()) {
        auto c = u.coords(row);
        if (!c) throw ContainmentViolation("lattice_quotient: denominator is not a sublattice");
        coords_hnf.add(RowVec::from_dense(*c));
    }
    IntLattice ch = coords_hnf.finalize();
    long rank = u.rank() - ch.rank();
    std::vector<Int> torsion;
    for (Int& d : smith_invariant_factors(ch))
        if (d > 1) torsion.push_back(std::move(d));
    return AbGroup(rank, std::move(torsion));
}

}  // namespace lcsq
