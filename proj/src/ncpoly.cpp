#include "lcsq/ncpoly.hpp"

#include <sstream>

namespace lcsq {

NcPoly NcPoly::monomial(const Word& w, Int c) {
    NcPoly p;
    if (c != 0) p.terms_.emplace(w, std::move(c));
    return p;
}

void NcPoly::add_term(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& rhs) const {
    NcPoly r(*this);
    r += rhs;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NcPoly NcPoly::operator-(const NcPoly& rhs) const {
    NcPoly r(*this);
    r -= rhs;
    return r;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator-() const {
    NcPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& rhs) const {
    NcPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : rhs.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

NcPoly NcPoly::operator*(const Int& c) const {
    NcPoly r;
    if (c == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

std::optional<long> NcPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = static_cast<long>(terms_.begin()->first.degree());
    for (const auto& [w, c] : terms_)
        if (static_cast<long>(w.degree()) != d) return std::nullopt;
    return d;
}

std::optional<MultiDegree> NcPoly::multihomogeneous_degree(int n) const {
    if (terms_.empty()) return std::nullopt;
    MultiDegree md = terms_.begin()->first.multidegree(n);
    for (const auto& [w, c] : terms_)
        if (w.multidegree(n) != md) return std::nullopt;
    return md;
}

std::string var_name(int32_t i, int n) {
    if (n <= 4) {
        static const char* names[] = {"x", "y", "z", "w"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

namespace {

void render_word(std::ostringstream& os, const Word& w, int n) {
    const auto& ls = w.letters();
    size_t i = 0;
    bool first = true;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (!first) os << "*";
        os << var_name(ls[i], n);
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
}

}  // namespace

std::string NcPoly::render(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Int a = int_abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (w.is_unit()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            render_word(os, w, n);
        }
        first = false;
    }
    return os.str();
}

NcPoly multiply(const NcPoly& p, const NcPoly& q) { return p * q; }

NcPoly commutator(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

}  // namespace lcsq
