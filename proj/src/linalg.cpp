#include "nichols/linalg.hpp"

#include <algorithm>

namespace nichols {

MonomialOperator MonomialOperator::identity(const CycloField& f, std::size_t dim) {
    MonomialOperator op;
    op.image.resize(dim);
    op.coeff.assign(dim, CycloNum::one(f));
    for (std::size_t i = 0; i < dim; ++i) op.image[i] = static_cast<std::uint32_t>(i);
    return op;
}

bool MonomialOperator::is_bijective() const {
    std::vector<bool> seen(dim(), false);
    for (auto v : image) {
        if (v >= dim() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

MonomialOperator MonomialOperator::inverse() const {
    if (!is_bijective()) throw std::invalid_argument("monomial operator is not invertible");
    MonomialOperator inv;
    inv.image.resize(dim());
    inv.coeff.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        inv.image[image[j]] = static_cast<std::uint32_t>(j);
        inv.coeff[image[j]] = coeff[j].inverse();
    }
    return inv;
}

bool MonomialOperator::operator==(const MonomialOperator& o) const {
    return image == o.image && coeff == o.coeff;
}

MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial operator dimension mismatch");
    MonomialOperator r;
    r.image.resize(a.dim());
    r.coeff.resize(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        r.image[j] = a.image[b.image[j]];
        r.coeff[j] = b.coeff[j] * a.coeff[b.image[j]];
    }
    return r;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.field = field;
    t.columns.resize(rows);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, v] : columns[j])
            t.columns[r].emplace_back(static_cast<std::uint32_t>(j), v);
    for (auto& c : t.columns)
        std::sort(c.begin(), c.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    return t;
}

SparseMatrix accumulate(std::span<const MonomialOperator> terms) {
    if (terms.empty()) throw std::invalid_argument("accumulate needs at least one term");
    const std::size_t dim = terms.front().dim();
    const CycloField& f = terms.front().coeff.at(0).field();
    for (const auto& t : terms)
        if (t.dim() != dim) throw std::invalid_argument("accumulate: dimension mismatch");

    SparseMatrix m;
    m.rows = m.cols = dim;
    m.field = &f;
    m.columns.resize(dim);
    std::vector<std::pair<std::uint32_t, const CycloNum*>> scratch;
    for (std::size_t j = 0; j < dim; ++j) {
        scratch.clear();
        for (const auto& t : terms) scratch.emplace_back(t.image[j], &t.coeff[j]);
        std::sort(scratch.begin(), scratch.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        auto& col = m.columns[j];
        for (std::size_t k = 0; k < scratch.size();) {
            std::uint32_t row = scratch[k].first;
            CycloNum sum = *scratch[k].second;
            for (++k; k < scratch.size() && scratch[k].first == row; ++k)
                sum += *scratch[k].second;
            if (!sum.is_zero()) col.emplace_back(row, std::move(sum));
        }
    }
    return m;
}

namespace {

/// v -= c * w for sorted sparse vectors; drops exact zeros.
void axpy_sub(std::vector<SparseMatrix::Entry>& v, const CycloNum& c,
              const std::vector<SparseMatrix::Entry>& w) {
    std::vector<SparseMatrix::Entry> out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(std::move(v[i++]));
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -(c * w[j].second));
            ++j;
        } else {
            CycloNum nv = v[i].second - c * w[j].second;
            if (!nv.is_zero()) out.emplace_back(v[i].first, std::move(nv));
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

}  // namespace

bool RankAccumulator::add_column(std::vector<SparseMatrix::Entry> column) {
    // One reduction pass suffices: pivot columns are fully reduced, so
    // subtracting them never reintroduces entries at pivot rows.
    std::vector<std::pair<std::size_t, CycloNum>> hits;
    for (const auto& [row, val] : column) {
        auto it = pivot_of_row_.find(row);
        if (it != pivot_of_row_.end()) hits.emplace_back(it->second, val);
    }
    for (const auto& [pidx, mult] : hits) axpy_sub(column, mult, pivots_[pidx].col);
    if (column.empty()) return false;

    // Markowitz-style pivot row: least occupied row among stored pivots.
    std::uint32_t best_row = column.front().first;
    std::uint32_t best_occ = UINT32_MAX;
    const CycloNum* best_val = nullptr;
    for (const auto& [row, val] : column) {
        auto it = row_occupancy_.find(row);
        std::uint32_t occ = (it == row_occupancy_.end()) ? 0 : it->second;
        if (best_val == nullptr || occ < best_occ) {
            best_row = row;
            best_occ = occ;
            best_val = &val;
        }
    }
    CycloNum inv = best_val->inverse();
    for (auto& [row, val] : column) val = val * inv;

    // Keep the pivot set Gauss-Jordan reduced.
    for (auto& p : pivots_) {
        auto it = std::lower_bound(p.col.begin(), p.col.end(), best_row,
                                   [](const auto& e, std::uint32_t r) { return e.first < r; });
        if (it != p.col.end() && it->first == best_row) {
            CycloNum c = it->second;
            for (const auto& [row, val] : p.col) {
                auto occ = row_occupancy_.find(row);
                if (occ != row_occupancy_.end() && occ->second > 0) --occ->second;
            }
            axpy_sub(p.col, c, column);
            for (const auto& [row, val] : p.col) ++row_occupancy_[row];
        }
    }

    for (const auto& [row, val] : column) ++row_occupancy_[row];
    pivot_of_row_[best_row] = pivots_.size();
    pivots_.push_back(Pivot{best_row, std::move(column)});
    return true;
}

std::size_t rank(const SparseMatrix& m) {
    RankAccumulator acc(m.rows);
    for (const auto& col : m.columns) acc.add_column(col);
    return acc.rank();
}

}  // namespace nichols
