#include "nichols/braided.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nichols {

namespace {

bool is_permutation(const std::vector<std::uint16_t>& row, unsigned n) {
    std::vector<bool> seen(n, false);
    for (auto v : row) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return row.size() == n;
}

}  // namespace

SetSolution::SetSolution(unsigned m, std::vector<std::vector<std::uint16_t>> sig,
                         std::vector<std::vector<std::uint16_t>> ta)
    : size(m), sigma(std::move(sig)), tau(std::move(ta)) {
    if (sigma.size() != m || tau.size() != m)
        throw std::invalid_argument("solution tables must have m rows");
    for (unsigned i = 0; i < m; ++i) {
        if (sigma[i].size() != m || tau[i].size() != m)
            throw std::invalid_argument("solution tables must be m x m");
        for (unsigned j = 0; j < m; ++j)
            if (sigma[i][j] >= m || tau[i][j] >= m)
                throw std::invalid_argument("solution table value out of range");
    }
}

bool r_bijective(const SetSolution& sol) {
    const unsigned m = sol.size;
    std::vector<bool> seen(std::size_t(m) * m, false);
    for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) {
            auto [u, v] = sol.r(x, y);
            std::size_t key = std::size_t(u) * m + v;
            if (seen[key]) return false;
            seen[key] = true;
        }
    return true;
}

SolutionFlags solution_checks(const SetSolution& sol) {
    const unsigned m = sol.size;
    SolutionFlags flags;

    flags.nondegenerate = true;
    for (unsigned i = 0; i < m && flags.nondegenerate; ++i) {
        if (!is_permutation(sol.sigma[i], m)) flags.nondegenerate = false;
        if (!is_permutation(sol.tau[i], m)) flags.nondegenerate = false;
    }

    // (r x id)(id x r)(r x id) == (id x r)(r x id)(id x r) on every triple
    flags.ybe = true;
    for (unsigned x = 0; x < m && flags.ybe; ++x)
        for (unsigned y = 0; y < m && flags.ybe; ++y)
            for (unsigned z = 0; z < m; ++z) {
                auto [a1, b1] = sol.r(x, y);
                auto [b2, c2] = sol.r(b1, z);
                auto [a3, b3] = sol.r(a1, b2);
                auto [b4, c4] = sol.r(y, z);
                auto [a5, b5] = sol.r(x, b4);
                auto [b6, c6] = sol.r(b5, c4);
                if (a3 != a5 || b3 != b6 || c2 != c6) {
                    flags.ybe = false;
                    break;
                }
            }

    flags.involutive = true;
    for (unsigned x = 0; x < m && flags.involutive; ++x)
        for (unsigned y = 0; y < m; ++y) {
            auto [u, v] = sol.r(x, y);
            auto [u2, v2] = sol.r(u, v);
            if (u2 != x || v2 != y) {
                flags.involutive = false;
                break;
            }
        }
    return flags;
}

Rack::Rack(unsigned n, std::vector<std::vector<std::uint16_t>> table)
    : size(n), op(std::move(table)) {
    if (op.size() != n) throw std::invalid_argument("rack table must have n rows");
    for (unsigned i = 0; i < n; ++i)
        if (!is_permutation(op[i], n))
            throw std::invalid_argument("rack left translation " + std::to_string(i) +
                                        " is not a bijection");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                if (op[i][op[j][k]] != op[op[i][j]][op[i][k]])
                    throw std::invalid_argument(
                        "self-distributivity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
}

Rack dihedral_rack(unsigned n) {
    if (n == 0) throw std::invalid_argument("rack size must be positive");
    std::vector<std::vector<std::uint16_t>> t(n, std::vector<std::uint16_t>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            t[i][j] = static_cast<std::uint16_t>((2 * i + n - j % n) % n);
    return Rack(n, std::move(t));
}

namespace {

std::vector<std::uint16_t> invert_permutation(const std::vector<std::uint16_t>& p) {
    std::vector<std::uint16_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint16_t>(i);
    return inv;
}

void require_nondegenerate(const SetSolution& sol, const char* op_name) {
    auto flags = solution_checks(sol);
    if (!flags.nondegenerate)
        throw std::invalid_argument(std::string(op_name) + " requires a non-degenerate solution");
}

}  // namespace

Rack derived_rack(const SetSolution& sol) {
    require_nondegenerate(sol, "derived_rack");
    const unsigned m = sol.size;
    std::vector<std::vector<std::uint16_t>> tau_inv(m);
    for (unsigned y = 0; y < m; ++y) tau_inv[y] = invert_permutation(sol.tau[y]);
    std::vector<std::vector<std::uint16_t>> t(m, std::vector<std::uint16_t>(m));
    for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) {
            std::uint16_t u = tau_inv[y][x];
            t[x][y] = sol.tau[x][sol.sigma[u][y]];
        }
    return Rack(m, std::move(t));
}

SetSolution conjugate_by_T(const SetSolution& sol) {
    require_nondegenerate(sol, "conjugate_by_T");
    const unsigned m = sol.size;
    std::vector<std::vector<std::uint16_t>> tau_inv(m);
    for (unsigned y = 0; y < m; ++y) tau_inv[y] = invert_permutation(sol.tau[y]);
    std::vector<std::vector<std::uint16_t>> sig(m, std::vector<std::uint16_t>(m));
    std::vector<std::vector<std::uint16_t>> ta(m, std::vector<std::uint16_t>(m));
    // T(x,y) = (tau_y(x), y); T^{-1}(x,y) = (tau_y^{-1}(x), y)
    for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) {
            auto [u, v] = sol.r(tau_inv[y][x], y);
            std::uint16_t ru = sol.tau[v][u];  // T applied to (u, v)
            sig[x][y] = ru;
            ta[y][x] = v;
        }
    return SetSolution(m, std::move(sig), std::move(ta));
}

SetSolution rack_to_solution(const Rack& rack) {
    const unsigned m = rack.size;
    std::vector<std::vector<std::uint16_t>> sig(m, std::vector<std::uint16_t>(m));
    std::vector<std::vector<std::uint16_t>> ta(m, std::vector<std::uint16_t>(m));
    for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) {
            sig[x][y] = rack.op[x][y];
            ta[y][x] = static_cast<std::uint16_t>(x);
        }
    return SetSolution(m, std::move(sig), std::move(ta));
}

namespace {

bool check_rack_map(const Rack& a, const Rack& b, const std::vector<std::uint16_t>& f) {
    for (unsigned x = 0; x < a.size; ++x)
        for (unsigned y = 0; y < a.size; ++y)
            if (f[a.op[x][y]] != b.op[f[x]][f[y]]) return false;
    return true;
}

}  // namespace

std::optional<std::vector<std::uint16_t>> rack_isomorphic(
    const Rack& a, const Rack& b, const std::optional<std::vector<std::uint16_t>>& f) {
    if (a.size != b.size) throw std::invalid_argument("rack size mismatch");
    if (f) {
        if (f->size() != a.size || !is_permutation(*f, a.size))
            throw std::invalid_argument("candidate map is not a bijection");
        if (check_rack_map(a, b, *f)) return *f;
        return std::nullopt;
    }
    if (a.size > 8)
        throw std::invalid_argument("brute-force isomorphism search capped at size 8");
    std::vector<std::uint16_t> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (check_rack_map(a, b, perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

MonomialBraiding::MonomialBraiding(unsigned dim, const CycloField& f)
    : dim_(dim), field_(&f) {
    if (dim == 0) throw std::invalid_argument("braiding dimension must be positive");
    si_.assign(std::size_t(dim) * dim, 0);
    tj_.assign(std::size_t(dim) * dim, 0);
    coeff_.assign(std::size_t(dim) * dim, CycloNum());
}

void MonomialBraiding::set(unsigned i, unsigned j, unsigned si, unsigned tj, CycloNum c) {
    if (i >= dim_ || j >= dim_ || si >= dim_ || tj >= dim_)
        throw std::invalid_argument("braiding index out of range");
    if (c.is_zero()) throw std::invalid_argument("braiding coefficient must be nonzero");
    si_[idx(i, j)] = static_cast<std::uint16_t>(si);
    tj_[idx(i, j)] = static_cast<std::uint16_t>(tj);
    coeff_[idx(i, j)] = std::move(c);
}

bool MonomialBraiding::complete() const {
    for (const auto& c : coeff_)
        if (c.is_zero() || &c.field() != field_) return false;
    return true;
}

SetSolution MonomialBraiding::solution() const {
    std::vector<std::vector<std::uint16_t>> sig(dim_, std::vector<std::uint16_t>(dim_));
    std::vector<std::vector<std::uint16_t>> ta(dim_, std::vector<std::uint16_t>(dim_));
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) {
            sig[i][j] = sigma(i, j);
            ta[j][i] = tau(i, j);
        }
    return SetSolution(dim_, std::move(sig), std::move(ta));
}

MonomialOperator MonomialBraiding::as_operator() const {
    MonomialOperator op;
    op.image.resize(std::size_t(dim_) * dim_);
    op.coeff.resize(std::size_t(dim_) * dim_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) {
            op.image[idx(i, j)] = static_cast<std::uint32_t>(sigma(i, j) * dim_ + tau(i, j));
            op.coeff[idx(i, j)] = coeff(i, j);
        }
    return op;
}

bool MonomialBraiding::operator==(const MonomialBraiding& o) const {
    return dim_ == o.dim_ && field_ == o.field_ && si_ == o.si_ && tj_ == o.tj_ &&
           coeff_ == o.coeff_;
}

std::optional<std::array<unsigned, 3>> braid_equation_violation(const MonomialBraiding& c) {
    if (!c.complete())
        throw std::invalid_argument("braid equation check requires a complete braiding table");
    const unsigned d = c.dim();
    // track (i, j, k, coeff) through c applied at slots 1 or 2
    struct State {
        unsigned i, j, k;
    };
    const CycloNum one = CycloNum::one(c.field());
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            for (unsigned k = 0; k < d; ++k) {
                auto step1 = [&](State s, CycloNum v) {
                    auto si = c.sigma(s.i, s.j), tj = c.tau(s.i, s.j);
                    return std::pair<State, CycloNum>({si, tj, s.k}, v * c.coeff(s.i, s.j));
                };
                auto step2 = [&](State s, CycloNum v) {
                    auto sj = c.sigma(s.j, s.k), tk = c.tau(s.j, s.k);
                    return std::pair<State, CycloNum>({s.i, sj, tk}, v * c.coeff(s.j, s.k));
                };
                auto [l1, lv1] = step1({i, j, k}, one);
                auto [l2, lv2] = step2(l1, lv1);
                auto [l3, lv3] = step1(l2, lv2);
                auto [r1, rv1] = step2({i, j, k}, one);
                auto [r2, rv2] = step1(r1, rv1);
                auto [r3, rv3] = step2(r2, rv2);
                if (l3.i != r3.i || l3.j != r3.j || l3.k != r3.k || lv3 != rv3)
                    return std::array<unsigned, 3>{i, j, k};
            }
    return std::nullopt;
}

std::optional<std::array<unsigned, 3>> cocycle_violation(const MonomialBraiding& c) {
    const unsigned d = c.dim();
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (c.coeff(i, j).is_zero())
                throw std::invalid_argument("cocycle check requires nonzero coefficients");
    auto R = [&](unsigned i, unsigned j) -> const CycloNum& { return c.coeff(i, j); };
    auto sg = [&](unsigned i, unsigned j) { return c.sigma(i, j); };
    auto ta = [&](unsigned i, unsigned j) { return c.tau(i, j); };
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            for (unsigned k = 0; k < d; ++k) {
                CycloNum lhs = R(i, j) * R(ta(i, j), k) * R(sg(i, j), sg(ta(i, j), k));
                CycloNum rhs = R(j, k) * R(i, sg(j, k)) * R(ta(i, sg(j, k)), ta(j, k));
                if (lhs != rhs) return std::array<unsigned, 3>{i, j, k};
            }
    return std::nullopt;
}

TwistConjugation twist_conjugate(const MonomialBraiding& c, const TwistPair& t) {
    const unsigned d = c.dim();
    if (t.phi1.dim() != d || t.phi2.dim() != d)
        throw std::invalid_argument("twist dimension mismatch");
    if (!t.phi1.is_bijective() || !t.phi2.is_bijective())
        throw std::invalid_argument("twist maps must be invertible");

    auto conj = [&](const MonomialOperator& L, const MonomialOperator& R) {
        MonomialOperator Linv = L.inverse(), Rinv = R.inverse();
        MonomialBraiding out(d, c.field());
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                unsigned i2 = L.image[i], j2 = R.image[j];
                unsigned u = c.sigma(i2, j2), v = c.tau(i2, j2);
                CycloNum val = L.coeff[i] * R.coeff[j] * c.coeff(i2, j2) * Linv.coeff[u] *
                               Rinv.coeff[v];
                out.set(i, j, Linv.image[u], Rinv.image[v], std::move(val));
            }
        return out;
    };

    TwistConjugation res;
    res.tilde = conj(t.phi1, t.phi2);
    res.bar = conj(t.phi2, t.phi1);
    res.equal = (res.tilde == res.bar);
    return res;
}

std::optional<DiagonalProfile> diagonal_profile(const MonomialBraiding& c) {
    const unsigned d = c.dim();
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (c.sigma(i, j) != j || c.tau(i, j) != i) return std::nullopt;
    DiagonalProfile p;
    p.dim = d;
    p.q.reserve(std::size_t(d) * d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) p.q.push_back(c.coeff(i, j));
    return p;
}

}  // namespace nichols
