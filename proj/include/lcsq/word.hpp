#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "lcsq/ints.hpp"

namespace lcsq {

class MultiDegree;

// A monomial of the free associative algebra: a finite sequence of generator
// indices. The empty sequence is the unit monomial.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int32_t> letters) : letters_(std::move(letters)) {}

    static Word unit() { return Word{}; }
    static Word generator(int32_t i) { return Word{{i}}; }

    const std::vector<int32_t>& letters() const { return letters_; }
    size_t degree() const { return letters_.size(); }
    bool is_unit() const { return letters_.empty(); }

    MultiDegree multidegree(int n) const;

    // Concatenation.
    Word operator*(const Word& rhs) const {
        std::vector<int32_t> l;
        l.reserve(letters_.size() + rhs.letters_.size());
        l.insert(l.end(), letters_.begin(), letters_.end());
        l.insert(l.end(), rhs.letters_.begin(), rhs.letters_.end());
        return Word{std::move(l)};
    }

    bool operator==(const Word&) const = default;

    // Degree-major order: shorter words first, lexicographic within a degree.
    std::strong_ordering operator<=>(const Word& rhs) const {
        if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
        return letters_ <=> rhs.letters_;
    }

private:
    std::vector<int32_t> letters_;
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (int32_t c : w.letters()) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(c));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Exponent vector of a graded cell: entry i counts occurrences of generator i.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int32_t> exponents) : e_(std::move(exponents)) {}

    static MultiDegree zero(int n) { return MultiDegree(std::vector<int32_t>(n, 0)); }

    int size() const { return static_cast<int>(e_.size()); }
    int32_t operator[](int i) const { return e_[i]; }
    const std::vector<int32_t>& exponents() const { return e_; }

    long total() const {
        long t = 0;
        for (int32_t v : e_) t += v;
        return t;
    }

    bool is_zero() const { return total() == 0; }

    // Componentwise comparison: does this dominate sub?
    bool contains(const MultiDegree& sub) const {
        if (sub.size() != size()) return false;
        for (int i = 0; i < size(); ++i)
            if (sub.e_[i] > e_[i]) return false;
        return true;
    }

    MultiDegree operator+(const MultiDegree& rhs) const {
        std::vector<int32_t> r(e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += rhs.e_[i];
        return MultiDegree{std::move(r)};
    }

    // Requires contains(rhs).
    MultiDegree operator-(const MultiDegree& rhs) const {
        std::vector<int32_t> r(e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= rhs.e_[i];
        return MultiDegree{std::move(r)};
    }

    // Image under a permutation of the generators: result[perm[i]] = e[i].
    MultiDegree permuted(const std::vector<int>& perm) const {
        std::vector<int32_t> r(e_.size(), 0);
        for (size_t i = 0; i < e_.size(); ++i) r[perm[i]] = e_[i];
        return MultiDegree{std::move(r)};
    }

    bool operator==(const MultiDegree&) const = default;
    auto operator<=>(const MultiDegree& rhs) const { return e_ <=> rhs.e_; }

private:
    std::vector<int32_t> e_;
};

// All words of the given multidegree in lexicographic order on letter
// sequences. Count equals the multinomial coefficient total!/prod(e_i!).
std::vector<Word> enumerate_words(const MultiDegree& deg);

// All n^d words of length d, lexicographic.
std::vector<Word> enumerate_words_total(int n, int d);

Int multinomial(const MultiDegree& deg);

// Every multidegree <= deg componentwise (including zero and deg itself),
// ordered by (total degree, lexicographic).
std::vector<MultiDegree> subdegrees(const MultiDegree& deg);

// Every multidegree on n generators with the given total degree, ordered
// lexicographically.
std::vector<MultiDegree> multidegrees_of_total(int n, long d);

}  // namespace lcsq
