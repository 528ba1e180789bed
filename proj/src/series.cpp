#include "lcsq/series.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace lcsq {

namespace {

std::string span_key(char kind, int k, const Cell& cell) {
    std::string s(1, kind);
    s += ":";
    s += std::to_string(k);
    s += ":";
    s += cell.key();
    return s;
}

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

SeriesEngine::SeriesEngine(Presentation pres) : pres_(std::move(pres)) {}

std::shared_ptr<const CellBasis> SeriesEngine::basis(const Cell& cell) {
    std::string key = cell.key();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = bases_.find(key);
        if (it != bases_.end()) return it->second;
    }
    auto cb = std::make_shared<const CellBasis>(pres_.generators(), cell);
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = bases_.emplace(std::move(key), std::move(cb));
    return it->second;
}

std::shared_ptr<const IntLattice> SeriesEngine::memo_get(
    const std::unordered_map<std::string, std::shared_ptr<const IntLattice>>& map,
    const std::string& key) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = map.find(key);
    return it == map.end() ? nullptr : it->second;
}

std::shared_ptr<const IntLattice> SeriesEngine::memo_put(
    std::unordered_map<std::string, std::shared_ptr<const IntLattice>>& map,
    const std::string& key, IntLattice value, int64_t rows_generated) {
    auto sp = std::make_shared<const IntLattice>(std::move(value));
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = map.emplace(key, std::move(sp));
    if (inserted) rowstats_.emplace(key, rows_generated);
    return it->second;
}

std::vector<Cell> SeriesEngine::proper_subcells(const Cell& cell, long min_total,
                                                long max_total) const {
    std::vector<Cell> out;
    if (cell.mode == GradingMode::Total) {
        for (long e = min_total; e <= max_total; ++e) out.push_back(Cell::total(e));
        return out;
    }
    for (const MultiDegree& sub : subdegrees(cell.md)) {
        long t = sub.total();
        if (t < min_total) continue;
        if (t > max_total) break;  // subdegrees are sorted by total degree
        out.push_back(Cell::multi(sub));
    }
    return out;
}

std::shared_ptr<const IntLattice> SeriesEngine::span_L(int k, const Cell& cell) {
    std::string key = span_key('L', k, cell);
    if (auto hit = memo_get(lmemo_, key)) return hit;

    auto cb = basis(cell);
    HnfBuilder builder(cb->dim());
    int64_t rows = 0;

    if (k == 1) return memo_put(lmemo_, key, IntLattice::full(cb->dim()), cb->dim());

    if (cell.total_degree() >= k) {
        // [m, s]: m a monomial of positive degree, s one level down
        for (const Cell& mc : proper_subcells(cell, 1, cell.total_degree() - (k - 1))) {
            Cell rest = mc.mode == GradingMode::Multi
                            ? Cell::multi(cell.md - mc.md)
                            : Cell::total(cell.total_degree() - mc.total_degree());
            auto prev = span_L(k - 1, rest);
            if (prev->rank() == 0) continue;
            auto mcb = basis(mc);
            auto rcb = basis(rest);
            std::vector<std::pair<int32_t, Int>> pairs;
            for (int32_t mi = 0; mi < mcb->dim(); ++mi) {
                const Word& m = mcb->word(mi);
                for (const RowVec& s : prev->basis()) {
                    pairs.clear();
                    s.for_each([&](int32_t wi, const Int& c) {
                        const Word& w = rcb->word(wi);
                        pairs.emplace_back(*cb->index(m * w), c);
                        pairs.emplace_back(*cb->index(w * m), -c);
                    });
                    builder.add(RowVec::from_pairs(cb->dim(), pairs));
                    ++rows;
                }
            }
        }
    }
    return memo_put(lmemo_, key, builder.finalize(), rows);
}

std::shared_ptr<const IntLattice> SeriesEngine::span_M(int k, const Cell& cell) {
    std::string key = span_key('M', k, cell);
    if (auto hit = memo_get(mmemo_, key)) return hit;

    auto cb = basis(cell);
    HnfBuilder builder(cb->dim());
    int64_t rows = 0;

    // L_1 is the whole algebra, so M_1 reaches degree 0; higher L_k start at
    // degree k
    long head_max = k == 1 ? cell.total_degree() : cell.total_degree() - k;
    if (head_max >= 0) {
        // m * s with m of any degree (the unit included)
        for (const Cell& mc : proper_subcells(cell, 0, head_max)) {
            Cell rest = mc.mode == GradingMode::Multi
                            ? Cell::multi(cell.md - mc.md)
                            : Cell::total(cell.total_degree() - mc.total_degree());
            auto lk = span_L(k, rest);
            if (lk->rank() == 0) continue;
            auto mcb = basis(mc);
            auto rcb = basis(rest);
            std::vector<std::pair<int32_t, Int>> pairs;
            for (int32_t mi = 0; mi < mcb->dim(); ++mi) {
                const Word& m = mcb->word(mi);
                for (const RowVec& s : lk->basis()) {
                    pairs.clear();
                    s.for_each([&](int32_t wi, const Int& c) {
                        pairs.emplace_back(*cb->index(m * rcb->word(wi)), c);
                    });
                    builder.add(RowVec::from_pairs(cb->dim(), pairs));
                    ++rows;
                }
            }
        }
    }
    return memo_put(mmemo_, key, builder.finalize(), rows);
}

std::shared_ptr<const IntLattice> SeriesEngine::span_ideal(const Cell& cell) {
    std::string key = span_key('I', 0, cell);
    if (auto hit = memo_get(imemo_, key)) return hit;

    auto cb = basis(cell);
    HnfBuilder builder(cb->dim());
    int64_t rows = 0;

    if (pres_.has_relation() && cell.total_degree() >= pres_.relation_degree()) {
        const NcPoly& f = *pres_.relation();
        long rest_total = cell.total_degree() - pres_.relation_degree();
        bool fits = true;
        Cell rest = cell;
        if (cell.mode == GradingMode::Multi) {
            const MultiDegree& phi = *pres_.relation_multidegree();
            fits = cell.md.contains(phi);
            if (fits) rest = Cell::multi(cell.md - phi);
        } else {
            rest = Cell::total(rest_total);
        }
        if (fits) {
            std::vector<std::pair<int32_t, Int>> pairs;
            for (const Cell& lc : proper_subcells(rest, 0, rest_total)) {
                Cell rc = lc.mode == GradingMode::Multi
                              ? Cell::multi(rest.md - lc.md)
                              : Cell::total(rest_total - lc.total_degree());
                auto lcb = basis(lc);
                auto rcb = basis(rc);
                for (int32_t li = 0; li < lcb->dim(); ++li) {
                    for (int32_t ri = 0; ri < rcb->dim(); ++ri) {
                        pairs.clear();
                        for (const auto& [t, c] : f.terms())
                            pairs.emplace_back(*cb->index(lcb->word(li) * t * rcb->word(ri)), c);
                        builder.add(RowVec::from_pairs(cb->dim(), pairs));
                        ++rows;
                    }
                }
            }
        }
    }
    return memo_put(imemo_, key, builder.finalize(), rows);
}

IntLattice SeriesEngine::span_sum(Series s, int k, const Cell& cell) {
    auto sk = s == Series::B ? span_L(k, cell) : span_M(k, cell);
    if (!pres_.has_relation()) return *sk;
    return lattice_sum(*sk, *span_ideal(cell));
}

GroupReport SeriesEngine::quotient_structure(Series s, int k, const Cell& cell) {
    if (k < 1) throw std::invalid_argument("series index k must be at least 1");
    if (cell.mode != pres_.grading())
        throw GradingError("query cell does not match the presentation's grading");
    if (cell.total_degree() < 0) throw std::invalid_argument("cell degree must be non-negative");

    int64_t t0 = now_ms();
    IntLattice upper = span_sum(s, k, cell);
    IntLattice lower = span_sum(s, k + 1, cell);
    GroupReport rep{SeriesQuery{pres_, s, k, cell}, lattice_quotient(upper, lower), 0, 0, 0, 0};
    rep.cell_dim = basis(cell)->dim();
    char kind = s == Series::B ? 'L' : 'M';
    rep.upper_rows = generated_rows(span_key(kind, k, cell));
    rep.lower_rows = generated_rows(span_key(kind, k + 1, cell));
    if (pres_.has_relation()) {
        int64_t ideal_rows = generated_rows(span_key('I', 0, cell));
        rep.upper_rows += ideal_rows;
        rep.lower_rows += ideal_rows;
    }
    rep.ms = now_ms() - t0;
    return rep;
}

std::vector<Cell> SeriesEngine::cells_up_to(long max_total_degree) const {
    std::vector<Cell> cells;
    for (long t = 0; t <= max_total_degree; ++t) {
        if (pres_.grading() == GradingMode::Multi)
            for (MultiDegree& md : multidegrees_of_total(pres_.generators(), t))
                cells.push_back(Cell::multi(std::move(md)));
        else
            cells.push_back(Cell::total(t));
    }
    return cells;
}

std::vector<GroupReport> SeriesEngine::sweep(Series s, int k, long max_total_degree, int jobs) {
    std::vector<Cell> cells = cells_up_to(max_total_degree);
    std::vector<GroupReport> reports(cells.size(),
                                     GroupReport{SeriesQuery{pres_, s, k, Cell{}}, AbGroup{}});
    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) reports[i] = quotient_structure(s, k, cells[i]);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            reports[i] = quotient_structure(s, k, cells[i]);
        }
    };
    std::vector<std::thread> pool;
    size_t nthreads = std::min(static_cast<size_t>(jobs), cells.size());
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

Cell SeriesEngine::cell_of(const NcPoly& p) const {
    if (pres_.grading() == GradingMode::Multi) {
        auto md = p.multihomogeneous_degree(pres_.generators());
        if (!md)
            throw std::invalid_argument(
                "polynomial is not multihomogeneous; the presentation is multigraded");
        return Cell::multi(*md);
    }
    auto d = p.homogeneous_degree();
    if (!d) throw std::invalid_argument("polynomial is not homogeneous");
    return Cell::total(*d);
}

bool SeriesEngine::member(const NcPoly& p, Target target, int k) {
    if (p.is_zero()) return true;
    Cell cell = cell_of(p);
    auto cb = basis(cell);
    RowVec row = poly_to_row(p, *cb);
    switch (target) {
        case Target::L: return span_L(k, cell)->contains(row);
        case Target::M: return span_M(k, cell)->contains(row);
        case Target::Ideal: return span_ideal(cell)->contains(row);
        case Target::Sum: return span_sum(Series::N, k, cell).contains(row);
    }
    return false;
}

RowVec SeriesEngine::poly_to_row(const NcPoly& p, const CellBasis& cb) const {
    std::vector<std::pair<int32_t, Int>> pairs;
    pairs.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) {
        auto idx = cb.index(w);
        if (!idx) throw std::logic_error("polynomial term outside its graded cell");
        pairs.emplace_back(*idx, c);
    }
    return RowVec::from_pairs(cb.dim(), std::move(pairs));
}

int64_t SeriesEngine::generated_rows(const std::string& memo_key) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = rowstats_.find(memo_key);
    return it == rowstats_.end() ? 0 : it->second;
}

}  // namespace lcsq
