#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nichols/linalg.hpp"

namespace nichols {

/// A set map r(x, y) = (sigma_x(y), tau_y(x)) on X x X with X = {1..m}
/// (stored 0-based). Tables are arbitrary; whether they satisfy the braid
/// relation, non-degeneracy or involutivity is checked, not assumed.
struct SetSolution {
    unsigned size = 0;
    std::vector<std::vector<std::uint16_t>> sigma;  // sigma[x][y] = sigma_x(y)
    std::vector<std::vector<std::uint16_t>> tau;    // tau[y][x]  = tau_y(x)

    SetSolution() = default;
    SetSolution(unsigned m, std::vector<std::vector<std::uint16_t>> sig,
                std::vector<std::vector<std::uint16_t>> ta);

    std::pair<std::uint16_t, std::uint16_t> r(unsigned x, unsigned y) const {
        return {sigma[x][y], tau[y][x]};
    }
    bool operator==(const SetSolution& o) const {
        return size == o.size && sigma == o.sigma && tau == o.tau;
    }
};

struct SolutionFlags {
    bool ybe = false;
    bool nondegenerate = false;
    bool involutive = false;
};

/// Exhaustive verification: braid relation on triples, bijectivity of every
/// sigma_i / tau_i, and r^2 = id on pairs.
SolutionFlags solution_checks(const SetSolution& sol);

/// Whether r itself is a bijection of X x X.
bool r_bijective(const SetSolution& sol);

/// A rack (X, |>) on {0..n-1}: left translations bijective and
/// i|>(j|>k) = (i|>j)|>(i|>k). Construction validates both axioms.
struct Rack {
    unsigned size = 0;
    std::vector<std::vector<std::uint16_t>> op;  // op[i][j] = i |> j

    Rack() = default;
    Rack(unsigned n, std::vector<std::vector<std::uint16_t>> table);

    std::uint16_t apply(unsigned i, unsigned j) const { return op[i][j]; }
    bool operator==(const Rack& o) const { return size == o.size && op == o.op; }
};

/// Z_n with i |> j = 2i - j.
Rack dihedral_rack(unsigned n);

/// x |> y = tau_x sigma_{tau_y^{-1}(x)}(y); requires non-degeneracy.
Rack derived_rack(const SetSolution& sol);

/// Conjugate by T(x,y) = (tau_y(x), y): computes T r T^{-1}, which lands on
/// the rack-type solution of the derived rack. Requires non-degeneracy.
SetSolution conjugate_by_T(const SetSolution& sol);

/// r(x, y) = (x |> y, x).
SetSolution rack_to_solution(const Rack& rack);

/// Verify the given bijection as a rack isomorphism, or brute-force search
/// one (size <= 8). Mapping is 0-based: f[x] in b corresponds to x in a.
std::optional<std::vector<std::uint16_t>> rack_isomorphic(
    const Rack& a, const Rack& b,
    const std::optional<std::vector<std::uint16_t>>& f = std::nullopt);

/// Braiding of set-theoretical type on V = k^d:
/// c(w_i (x) w_j) = R_{i,j} w_{sigma_i(j)} (x) w_{tau_j(i)}, all R nonzero.
/// Indices are 0-based internally, 1-based in the external JSON format.
class MonomialBraiding {
public:
    MonomialBraiding() = default;
    MonomialBraiding(unsigned dim, const CycloField& f);

    unsigned dim() const { return dim_; }
    const CycloField& field() const { return *field_; }

    void set(unsigned i, unsigned j, unsigned si, unsigned tj, CycloNum coeff);
    std::uint16_t sigma(unsigned i, unsigned j) const { return si_[idx(i, j)]; }
    std::uint16_t tau(unsigned i, unsigned j) const { return tj_[idx(i, j)]; }
    const CycloNum& coeff(unsigned i, unsigned j) const { return coeff_[idx(i, j)]; }

    /// The combinatorial shadow (sigma/tau tables).
    SetSolution solution() const;
    /// The braiding as a monomial operator on V (x) V, row-major index i*d+j.
    MonomialOperator as_operator() const;
    /// True once every (i, j) entry has been set with a nonzero coefficient.
    bool complete() const;

    bool operator==(const MonomialBraiding& o) const;

private:
    std::size_t idx(unsigned i, unsigned j) const { return std::size_t(i) * dim_ + j; }
    unsigned dim_ = 0;
    const CycloField* field_ = nullptr;
    std::vector<std::uint16_t> si_, tj_;
    std::vector<CycloNum> coeff_;
};

/// c1 c2 c1 = c2 c1 c2 on V^{(x)3}, coefficient-exactly; returns a violating
/// basis triple (0-based) when the equation fails.
std::optional<std::array<unsigned, 3>> braid_equation_violation(const MonomialBraiding& c);
inline bool check_braid_equation(const MonomialBraiding& c) {
    return !braid_equation_violation(c).has_value();
}

/// The two-sided coefficient condition
///   R_{i,j} R_{tau_j(i),k} R_{sigma_i(j),sigma_{tau_j(i)}(k)}
///     = R_{j,k} R_{i,sigma_j(k)} R_{tau_{sigma_j(k)}(i),tau_k(j)}
/// on all triples. Throws if any coefficient is zero.
std::optional<std::array<unsigned, 3>> cocycle_violation(const MonomialBraiding& c);
inline bool cocycle_check(const MonomialBraiding& c) {
    return !cocycle_violation(c).has_value();
}

/// Two invertible monomial maps on V used for twist conjugation.
struct TwistPair {
    MonomialOperator phi1, phi2;
};

struct TwistConjugation {
    MonomialBraiding tilde;  // (phi1^-1 (x) phi2^-1) c (phi1 (x) phi2)
    MonomialBraiding bar;    // (phi2^-1 (x) phi1^-1) c (phi2 (x) phi1)
    bool equal = false;      // coefficient-exact equality of the two
};

/// When equal is true the conjugated map is again a braiding and the graded
/// Nichols dimensions agree with those of c.
TwistConjugation twist_conjugate(const MonomialBraiding& c, const TwistPair& t);

/// For a braiding of diagonal type (sigma_i(j) = j, tau_j(i) = i), the d x d
/// coefficient matrix; for d = 2 the Dynkin data (q11, q12*q21, q22) is
/// derivable from it.
struct DiagonalProfile {
    unsigned dim = 0;
    std::vector<CycloNum> q;  // row-major, q[i*dim+j]
    const CycloNum& at(unsigned i, unsigned j) const { return q[std::size_t(i) * dim + j]; }
    /// (q11, q12*q21, q22) when dim == 2.
    std::optional<std::array<CycloNum, 3>> dynkin() const {
        if (dim != 2) return std::nullopt;
        return std::array<CycloNum, 3>{at(0, 0), at(0, 1) * at(1, 0), at(1, 1)};
    }
};
std::optional<DiagonalProfile> diagonal_profile(const MonomialBraiding& c);

}  // namespace nichols
