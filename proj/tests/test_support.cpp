#include "test_support.hpp"

#include <algorithm>
#include <numeric>

namespace nichols::testing {

std::vector<std::vector<CycloNum>> dense_symmetrizer(const MonomialBraiding& c, unsigned n) {
    const unsigned d = c.dim();
    std::size_t D = 1;
    for (unsigned i = 0; i < n; ++i) D *= d;
    const CycloNum zero = CycloNum::zero(c.field());
    const CycloNum one = CycloNum::one(c.field());
    std::vector<std::vector<CycloNum>> m(D, std::vector<CycloNum>(D, zero));

    // little-endian digits: slot s (1-based) = (idx / d^(s-1)) % d
    std::vector<std::size_t> pw(n + 1, 1);
    for (unsigned i = 1; i <= n; ++i) pw[i] = pw[i - 1] * d;

    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<unsigned> word;  // letters: slot positions 1..n-1
    do {
        // reduced word by sorting with adjacent swaps (one per inversion)
        word.clear();
        std::vector<unsigned> v = perm;
        bool moved = true;
        while (moved) {
            moved = false;
            for (unsigned i = 0; i + 1 < n; ++i)
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(i + 1);
                    moved = true;
                }
        }
        for (std::size_t j = 0; j < D; ++j) {
            std::size_t idx = j;
            CycloNum coeff = one;
            // apply rightmost letter first
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                const unsigned s = *it;
                const unsigned a = static_cast<unsigned>((idx / pw[s - 1]) % d);
                const unsigned b = static_cast<unsigned>((idx / pw[s]) % d);
                // slot s holds the FIRST factor of the braided pair
                const unsigned sa = c.sigma(a, b), tb = c.tau(a, b);
                idx += (std::size_t(sa) - a) * pw[s - 1] + (std::size_t(tb) - b) * pw[s];
                coeff *= c.coeff(a, b);
            }
            m[idx][j] += coeff;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return m;
}

std::size_t dense_rank(std::vector<std::vector<CycloNum>> m) {
    if (m.empty()) return 0;
    const std::size_t R = m.size(), C = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && m[piv][col].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(m[piv], m[rank]);
        CycloNum inv = m[rank][col].inverse();
        for (std::size_t j = col; j < C; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            CycloNum f = m[i][col];
            for (std::size_t j = col; j < C; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t oracle_rank(const MonomialBraiding& c, unsigned n) {
    return dense_rank(dense_symmetrizer(c, n));
}

CycloNum random_cyclo(const CycloField& f, Rng& rng) {
    std::vector<Rat> cs(f.degree());
    for (auto& c : cs) {
        long num = static_cast<long>(rng.below(7)) - 3;
        long den = 1 + static_cast<long>(rng.below(3));
        c = Rat(num, den);
        c.canonicalize();
    }
    return CycloNum(f, std::move(cs));
}

CycloNum random_root(const CycloField& f, Rng& rng) {
    CycloNum v = CycloNum::root_power(f, static_cast<long>(rng.below(f.order())));
    return (rng.below(2) == 0) ? v : -v;
}

MonomialBraiding flip_braiding(const CycloField& f, unsigned d) {
    MonomialBraiding c(d, f);
    const CycloNum one = CycloNum::one(f);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) c.set(i, j, j, i, one);
    return c;
}

MonomialBraiding rack_braiding(const Rack& rack, const CycloNum& q) {
    MonomialBraiding c(rack.size, q.field());
    for (unsigned i = 0; i < rack.size; ++i)
        for (unsigned j = 0; j < rack.size; ++j) c.set(i, j, rack.op[i][j], i, q);
    return c;
}

MonomialBraiding diagonal_braiding(const CycloField& f, unsigned d,
                                   const std::vector<CycloNum>& q) {
    MonomialBraiding c(d, f);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) c.set(i, j, j, i, q[std::size_t(i) * d + j]);
    return c;
}

}  // namespace nichols::testing
