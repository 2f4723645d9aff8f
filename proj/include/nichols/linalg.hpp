#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nichols/cyclo.hpp"

namespace nichols {

/// A linear map sending each basis vector to a scalar multiple of a basis
/// vector: e_j -> coeff[j] * e_{image[j]}. Compositions of monomial
/// operators are monomial; the operator is invertible iff image is a
/// bijection (every coefficient is nonzero by construction).
struct MonomialOperator {
    std::vector<std::uint32_t> image;
    std::vector<CycloNum> coeff;

    std::size_t dim() const { return image.size(); }
    static MonomialOperator identity(const CycloField& f, std::size_t dim);

    bool is_bijective() const;
    MonomialOperator inverse() const;  // throws if not bijective

    bool operator==(const MonomialOperator& o) const;
};

/// (a o b): apply b first, then a.
MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b);

/// Column-major sparse matrix over one cyclotomic field. No stored entry is
/// zero; each column is sorted by row.
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, CycloNum>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    const CycloField* field = nullptr;
    std::vector<std::vector<Entry>> columns;

    std::size_t nnz() const;
    SparseMatrix transpose() const;
};

/// Entrywise sum of monomial operators; colliding positions add and exact
/// cancellations drop out of the result.
SparseMatrix accumulate(std::span<const MonomialOperator> terms);

/// Incremental exact rank: columns are reduced one at a time against a
/// Gauss-Jordan-reduced pivot set, so the full matrix never needs to exist
/// at once. Pivot rows are chosen Markowitz-style (lowest occupancy among
/// already-stored pivots, then lowest row index); correctness does not
/// depend on the choice.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t rows) : rows_(rows) {}

    /// Returns true if the column was independent (rank grew).
    bool add_column(std::vector<SparseMatrix::Entry> column);
    std::size_t rank() const { return pivots_.size(); }

private:
    struct Pivot {
        std::uint32_t row;
        std::vector<SparseMatrix::Entry> col;  // 1 at `row`, 0 at other pivot rows
    };

    std::size_t rows_;
    std::vector<Pivot> pivots_;
    std::unordered_map<std::uint32_t, std::size_t> pivot_of_row_;
    std::unordered_map<std::uint32_t, std::uint32_t> row_occupancy_;
};

/// Exact rank over Q(zeta_M); independent of elimination order.
std::size_t rank(const SparseMatrix& m);

}  // namespace nichols
