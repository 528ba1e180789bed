#include "lcsq/word.hpp"

#include <algorithm>
#include <functional>

namespace lcsq {

MultiDegree Word::multidegree(int n) const {
    std::vector<int32_t> e(n, 0);
    for (int32_t c : letters_) ++e[c];
    return MultiDegree{std::move(e)};
}

std::vector<Word> enumerate_words(const MultiDegree& deg) {
    std::vector<int32_t> letters;
    letters.reserve(deg.total());
    for (int i = 0; i < deg.size(); ++i)
        letters.insert(letters.end(), deg[i], static_cast<int32_t>(i));

    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<Word> enumerate_words_total(int n, int d) {
    std::vector<Word> out;
    std::vector<int32_t> letters(d, 0);
    while (true) {
        out.emplace_back(letters);
        int i = d - 1;
        while (i >= 0 && letters[i] == n - 1) letters[i--] = 0;
        if (i < 0) break;
        ++letters[i];
    }
    return out;
}

Int multinomial(const MultiDegree& deg) {
    Int r = factorial(static_cast<unsigned long>(deg.total()));
    for (int i = 0; i < deg.size(); ++i)
        r = int_divexact(r, factorial(static_cast<unsigned long>(deg[i])));
    return r;
}

std::vector<MultiDegree> subdegrees(const MultiDegree& deg) {
    std::vector<MultiDegree> out;
    std::vector<int32_t> cur(deg.size(), 0);
    while (true) {
        out.emplace_back(cur);
        int i = deg.size() - 1;
        while (i >= 0 && cur[i] == deg[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

std::vector<MultiDegree> multidegrees_of_total(int n, long d) {
    std::vector<MultiDegree> out;
    std::vector<int32_t> cur(n, 0);
    // walk compositions of d into n parts in lexicographic order
    cur[n - 1] = static_cast<int32_t>(d);
    std::function<void(int, long)> rec = [&](int pos, long rest) {
        if (pos == n - 1) {
            cur[pos] = static_cast<int32_t>(rest);
            out.emplace_back(cur);
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            cur[pos] = static_cast<int32_t>(v);
            rec(pos + 1, rest - v);
        }
    };
    rec(0, d);
    return out;
}

}  // namespace lcsq
