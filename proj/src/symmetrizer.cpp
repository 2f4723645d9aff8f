#include "nichols/symmetrizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace nichols {

namespace {

std::size_t checked_power(std::size_t d, unsigned n) {
    std::size_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::size_t>::max() / d)
            throw std::overflow_error("tensor power dimension overflow");
        r *= d;
    }
    return r;
}

/// Shared coefficient pool: columns and composite operators store small ids
/// instead of full coordinate vectors. Values are canonical (reduced), so
/// id equality is value equality.
class CoeffPool {
public:
    explicit CoeffPool(const CycloField& f) : field_(&f) {
        one_ = intern(CycloNum::one(f));
    }

    std::int32_t intern(CycloNum v) {
        auto it = index_.find(v);
        if (it != index_.end()) return it->second;
        std::int32_t id = static_cast<std::int32_t>(values_.size());
        index_.emplace(v, id);
        values_.push_back(std::move(v));
        return id;
    }

    std::int32_t mul(std::int32_t a, std::int32_t b) {
        if (a == one_) return b;
        if (b == one_) return a;
        std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                            static_cast<std::uint32_t>(b);
        auto it = mul_memo_.find(key);
        if (it != mul_memo_.end()) return it->second;
        std::int32_t id = intern(values_[a] * values_[b]);
        mul_memo_.emplace(key, id);
        return id;
    }

    const CycloNum& value(std::int32_t id) const { return values_[id]; }
    std::int32_t one() const { return one_; }

private:
    struct Cmp {
        bool operator()(const CycloNum& a, const CycloNum& b) const {
            return CycloNum::compare(a, b) < 0;
        }
    };
    const CycloField* field_;
    std::vector<CycloNum> values_;
    std::map<CycloNum, std::int32_t, Cmp> index_;
    std::unordered_map<std::uint64_t, std::int32_t> mul_memo_;
    std::int32_t one_ = 0;
};

struct PooledEntry {
    std::uint32_t row;
    std::int32_t coeff;
};
using PooledColumn = std::vector<PooledEntry>;

/// Composite monomial operator with pooled coefficients.
struct PooledOp {
    std::vector<std::uint32_t> image;
    std::vector<std::int32_t> coeff;
};

/// Streams the symmetrizer degrees: keeps the columns of S_{n-1} to build
/// the columns of S_n one at a time, feeding each into a RankAccumulator.
class Engine {
public:
    Engine(const MonomialBraiding& c) : c_(c), pool_(c.field()) {
        if (!c.complete()) throw std::invalid_argument("braiding table is incomplete");
        d_ = c.dim();
        // degree 1: S_1 = id
        cols_.resize(d_);
        for (unsigned j = 0; j < d_; ++j)
            cols_[j] = {PooledEntry{j, pool_.one()}};
        degree_ = 1;
    }

    /// Rank of the next degree's symmetrizer. deadline/entry budget are
    /// checked per column; a Budget exception carries no partial rank.
    struct BudgetExceeded {};

    std::size_t step(std::chrono::steady_clock::time_point deadline,
                     std::size_t max_entries, std::size_t* nnz_out) {
        const unsigned n = degree_ + 1;
        const std::size_t D = checked_power(d_, n);
        auto terms = partial_shift_terms(n);

        std::vector<PooledColumn> next(D);
        RankAccumulator acc(D);
        std::vector<std::pair<std::uint32_t, std::int32_t>> scratch;
        std::size_t stored = 0;
        for (std::size_t j = 0; j < D; ++j) {
            const std::size_t jprev = j / d_;
            const std::uint32_t last = static_cast<std::uint32_t>(j % d_);
            scratch.clear();
            for (const auto& t : terms)
                for (const auto& e : cols_[jprev]) {
                    std::size_t src = std::size_t(e.row) * d_ + last;
                    scratch.emplace_back(t.image[src], pool_.mul(e.coeff, t.coeff[src]));
                }
            std::sort(scratch.begin(), scratch.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            PooledColumn col;
            for (std::size_t k = 0; k < scratch.size();) {
                const std::uint32_t row = scratch[k].first;
                CycloNum sum = pool_.value(scratch[k].second);
                for (++k; k < scratch.size() && scratch[k].first == row; ++k)
                    sum += pool_.value(scratch[k].second);
                if (!sum.is_zero()) col.push_back(PooledEntry{row, pool_.intern(std::move(sum))});
            }
            stored += col.size();
            if (stored > max_entries) throw BudgetExceeded{};
            if ((j & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
                throw BudgetExceeded{};
            std::vector<SparseMatrix::Entry> dense_col;
            dense_col.reserve(col.size());
            for (const auto& e : col) dense_col.emplace_back(e.row, pool_.value(e.coeff));
            acc.add_column(std::move(dense_col));
            next[j] = std::move(col);
        }
        cols_ = std::move(next);
        degree_ = n;
        if (nnz_out) *nnz_out = stored;
        return acc.rank();
    }

    /// Materialize the current degree's matrix (degree() must equal n).
    SparseMatrix materialize() const {
        SparseMatrix m;
        m.rows = m.cols = cols_.size();
        m.field = &c_.field();
        m.columns.resize(cols_.size());
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& e : cols_[j])
                m.columns[j].emplace_back(e.row, pool_.value(e.coeff));
        return m;
    }

    unsigned degree() const { return degree_; }

private:
    /// The n terms of S_{n-1,1} on V^{(x)n}: id, c_{n-1}, c_{n-2}c_{n-1}, ...
    std::vector<PooledOp> partial_shift_terms(unsigned n) {
        const std::size_t D = checked_power(d_, n);
        std::vector<PooledOp> terms;
        terms.reserve(n);
        PooledOp id;
        id.image.resize(D);
        id.coeff.assign(D, pool_.one());
        for (std::size_t x = 0; x < D; ++x) id.image[x] = static_cast<std::uint32_t>(x);
        terms.push_back(std::move(id));
        for (unsigned t = 1; t < n; ++t) {
            const unsigned pos = n - t;  // apply c at slots (pos, pos+1)
            const std::size_t lo = checked_power(d_, n - pos - 1);
            const std::size_t hi = lo * d_;
            const PooledOp& prev = terms.back();
            PooledOp cur;
            cur.image.resize(D);
            cur.coeff.resize(D);
            for (std::size_t x = 0; x < D; ++x) {
                const std::size_t y = prev.image[x];
                const unsigned a = static_cast<unsigned>((y / hi) % d_);
                const unsigned b = static_cast<unsigned>((y / lo) % d_);
                const unsigned sa = c_.sigma(a, b), tb = c_.tau(a, b);
                cur.image[x] = static_cast<std::uint32_t>(
                    y + (std::size_t(sa) - a) * hi + (std::size_t(tb) - b) * lo);
                cur.coeff[x] = pool_.mul(prev.coeff[x], coeff_id(a, b));
            }
            terms.push_back(std::move(cur));
        }
        return terms;
    }

    std::int32_t coeff_id(unsigned a, unsigned b) {
        auto key = a * d_ + b;
        if (coeff_ids_.empty()) coeff_ids_.assign(std::size_t(d_) * d_, -1);
        if (coeff_ids_[key] < 0) coeff_ids_[key] = pool_.intern(c_.coeff(a, b));
        return coeff_ids_[key];
    }

    const MonomialBraiding& c_;
    CoeffPool pool_;
    unsigned d_ = 0;
    unsigned degree_ = 0;
    std::vector<PooledColumn> cols_;
    std::vector<std::int32_t> coeff_ids_;
};

}  // namespace

MonomialOperator braiding_at_slot(const MonomialBraiding& c, unsigned n, unsigned i) {
    if (i < 1 || i + 1 > n)
        throw std::invalid_argument("slot index out of range: need 1 <= i <= n-1");
    const unsigned d = c.dim();
    const std::size_t D = checked_power(d, n);
    const std::size_t lo = checked_power(d, n - i - 1);
    const std::size_t hi = lo * d;
    MonomialOperator op;
    op.image.resize(D);
    op.coeff.resize(D);
    for (std::size_t x = 0; x < D; ++x) {
        const unsigned a = static_cast<unsigned>((x / hi) % d);
        const unsigned b = static_cast<unsigned>((x / lo) % d);
        const unsigned sa = c.sigma(a, b), tb = c.tau(a, b);
        op.image[x] = static_cast<std::uint32_t>(x + (std::size_t(sa) - a) * hi +
                                                 (std::size_t(tb) - b) * lo);
        op.coeff[x] = c.coeff(a, b);
    }
    return op;
}

SparseMatrix symmetrizer(const MonomialBraiding& c, unsigned n) {
    if (n < 1) throw std::invalid_argument("symmetrizer degree must be >= 1");
    Engine eng(c);
    auto deadline = std::chrono::steady_clock::time_point::max();
    while (eng.degree() < n)
        eng.step(deadline, std::numeric_limits<std::size_t>::max(), nullptr);
    return eng.materialize();
}

ScanReport finiteness_scan(const MonomialBraiding& c, unsigned cap, const ScanBudget& budget) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    ScanReport rep;
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = std::chrono::steady_clock::time_point::max();
    if (std::isfinite(budget.seconds) && budget.seconds < 1e9)
        deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget.seconds));
    GradedDims& g = rep.graded;
    g.dims = {1, c.dim()};
    g.degrees_computed = 1;
    rep.per_degree.push_back(DegreeStats{1, c.dim(), c.dim(), c.dim(), 0.0});
    if (cap == 1) return rep;

    Engine eng(c);
    try {
        while (eng.degree() < cap) {
            auto ts = std::chrono::steady_clock::now();
            std::size_t nnz = 0;
            std::size_t r = eng.step(deadline, budget.max_stored_entries, &nnz);
            auto te = std::chrono::steady_clock::now();
            g.dims.push_back(r);
            g.degrees_computed = eng.degree();
            rep.per_degree.push_back(DegreeStats{
                eng.degree(), checked_power(c.dim(), eng.degree()), nnz, r,
                std::chrono::duration<double>(te - ts).count()});
            if (r == 0) {
                g.finite = true;
                g.top_degree = eng.degree() - 1;
                for (auto v : g.dims) g.total += v;
                break;
            }
        }
    } catch (const Engine::BudgetExceeded&) {
        rep.budget_exceeded = true;  // partial report, verdict stays undetermined
    }
    return rep;
}

GradedDims graded_dims(const MonomialBraiding& c, unsigned cap, const ScanBudget& budget) {
    return finiteness_scan(c, cap, budget).graded;
}

}  // namespace nichols
