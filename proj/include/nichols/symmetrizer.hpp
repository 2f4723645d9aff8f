#pragma once

#include <chrono>
#include <limits>

#include "nichols/braided.hpp"

namespace nichols {

/// c_i = id^{(x)(i-1)} (x) c (x) id^{(x)(n-i-1)} on V^{(x)n}, 1 <= i <= n-1.
/// Basis index is big-endian in the tensor slots: slot 1 is the most
/// significant digit.
MonomialOperator braiding_at_slot(const MonomialBraiding& c, unsigned n, unsigned i);

/// The n-th quantum symmetrizer, assembled through the recursion
///   S_1 = id,  S_n = S_{n-1,1} (S_{n-1} (x) id),
///   S_{n-1,1} = id + c_{n-1} + c_{n-2}c_{n-1} + ... + c_1...c_{n-1},
/// materialized as a sparse matrix on d^n. Intended for desk-size n; the
/// graded scanner streams columns instead of materializing.
SparseMatrix symmetrizer(const MonomialBraiding& c, unsigned n);

struct GradedDims {
    /// dims[n] = dim B^n = rank S_n, n = 0..; ends at the first zero when the
    /// verdict is finite, else at the cap (or at the budget cutoff).
    std::vector<std::size_t> dims;
    bool finite = false;
    std::size_t total = 0;        // meaningful when finite
    unsigned top_degree = 0;      // meaningful when finite
    unsigned degrees_computed = 0;  // number of ranks actually computed (degrees 1..)
};

struct ScanBudget {
    double seconds = 600.0;
    std::size_t max_stored_entries = 400u * 1000u * 1000u;
    static ScanBudget unlimited() {
        return {std::numeric_limits<double>::infinity(),
                std::numeric_limits<std::size_t>::max()};
    }
};

struct DegreeStats {
    unsigned degree = 0;
    std::size_t space_dim = 0;  // d^degree
    std::size_t nnz = 0;        // stored entries of S_degree after cancellation
    std::size_t rank = 0;
    double seconds = 0.0;
};

struct ScanReport {
    GradedDims graded;
    std::vector<DegreeStats> per_degree;
    bool budget_exceeded = false;
};

/// dims[n] = rank S_n for n <= cap with early stop at the first zero rank.
GradedDims graded_dims(const MonomialBraiding& c, unsigned cap,
                       const ScanBudget& budget = ScanBudget{});

/// graded_dims plus timing and per-degree matrix statistics. Exceeding the
/// budget yields a partial report flagged as not finite (undetermined),
/// never a guess.
ScanReport finiteness_scan(const MonomialBraiding& c, unsigned cap,
                           const ScanBudget& budget = ScanBudget{});

}  // namespace nichols
