#pragma once

#include <string>
#include <variant>

#include "nichols/braided.hpp"

namespace nichols {

// ---------------------------------------------------------------------------
// V_abe: the two-dimensional braiding
//   c(v1 (x) v1) = a v2 (x) v2,  c(v1 (x) v2) = b v1 (x) v2,
//   c(v2 (x) v1) = b v2 (x) v1,  c(v2 (x) v2) = e v1 (x) v1.
// ---------------------------------------------------------------------------

struct VAbeParams {
    CycloNum a, b, e;  // nonzero, one common field
};

MonomialBraiding v_abe(const VAbeParams& p);

/// Rescale v1 by a fourth root of e/a (field enlarged to order 8M so the
/// root exists), giving the symmetric form V_{s b s} with s = sqrt(ae), then
/// swap-twist it to diagonal type with profile (b, ae, b). All three have
/// equal graded Nichols dimensions.
struct VAbeDiagonalization {
    MonomialBraiding iso_form;  // V_{sqrt(ae) b sqrt(ae)} in the enlarged field
    MonomialBraiding diagonal;  // swap-twisted, diagonal type
    CycloNum sqrt_ae;
};
VAbeDiagonalization v_abe_diagonalize(const VAbeParams& p);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

struct FamilyVerdict {
    enum class Kind { finite, infinite, open };
    Kind kind = Kind::open;
    unsigned long total = 0;  // meaningful when finite
    std::string type_name;    // e.g. "Cartan A2", "super A2(q;I2)"
    std::string rule;         // the decision rule that fired
};

/// Closed-form dimension of B(V_abe):
///   27  if ae = b^2, b in G_3;  4m if b = -1, ae in G_m;
///   m^2 if ae = 1, b in G_m (m >= 2);  infinite otherwise.
FamilyVerdict v_abe_verdict(const VAbeParams& p);

// ---------------------------------------------------------------------------
// K family: the 2n-dimensional simple Yetter-Drinfeld modules K^s_{jk,p}
// over the even Suzuki algebras, with omega a primitive 8nN-th root,
// K = omega^{8nk}, J = omega^{2jN}.
// ---------------------------------------------------------------------------

struct KParams {
    unsigned N = 1;  // N >= 1
    unsigned n = 1;  // half the dimension
    int j = 2;       // 1 or 3 when lambda = -1; 2 or 4 when lambda = 1
    unsigned k = 0;  // 0..N-1
    int p = 0;       // 0 or 1
    unsigned s = 1;  // 1..N
    int mu = 1;      // +1 or -1
    int lambda = 1;  // +1 or -1

    void validate() const;
    unsigned field_order() const { return 8 * n * N; }
};

enum class TwistVariant { tilde, bar };

MonomialBraiding k_braiding(const KParams& p);
/// phi1 scales by x_b and reflects odd b != 1; phi2 reflects even indices.
TwistPair k_twist(const KParams& p);
/// The conjugated braiding built directly from its closed-form case table
/// (not by conjugation); the independent target of verification.
MonomialBraiding k_closed_form(const KParams& p, TwistVariant variant);
/// q = (-1)^p (K mu)^s. n=1: finite iff lambda q^2 = 1 != q (A1xA1, m^2) or
/// lambda q^3 = 1 != q (A2, m^3); n=2: 64 iff q = -1 and lambda = 1; n>2:
/// infinite.
FamilyVerdict k_verdict(const KParams& p);

// ---------------------------------------------------------------------------
// N family: the (2n+1)-dimensional simple Yetter-Drinfeld modules N^s_{k,pq}
// over the odd Suzuki algebras, with omega a primitive 8N(2n+1)-th root and
// B = mu^{1/2} omega^{2k(2n+1)} (branch: 1 when mu = 1, zeta_4 when mu = -1).
// ---------------------------------------------------------------------------

struct NParams {
    unsigned N = 1;
    unsigned n = 1;  // dimension is 2n+1
    unsigned k = 0;  // 0..N-1
    int p = 0;       // 0 or 1
    int q = 0;       // 0 or 1
    unsigned s = 1;  // 1..N
    int mu = 1;
    int lambda = 1;

    void validate() const;
    unsigned field_order() const { return 8 * N * (2 * n + 1); }
};

MonomialBraiding n_braiding(const NParams& p);
/// phi1 maps odd a to x_a w_{2n+2-a} and even a to x_a w_a; phi2 is the
/// coefficient-free reflection on even indices.
TwistPair n_twist(const NParams& p);
MonomialBraiding n_closed_form(const NParams& p, TwistVariant variant);

// ---------------------------------------------------------------------------
// L and I families: set-theoretic solutions only (their braiding
// coefficients live elsewhere); both are dihedral up to conjugation.
// ---------------------------------------------------------------------------

struct SetFamily {
    SetSolution solution;          // on X = {1..m}, stored 0-based
    std::vector<std::uint16_t> f;  // the conjugating bijection, 0-based
};

/// Solution on {1..2n+1}; conjugating by f (odd fixed, even reflected)
/// gives exactly the rack-type solution of the dihedral rack D_{2n+1}.
SetFamily l_family(unsigned n);
/// Solution on {1..2n} (n >= 2); f-conjugation gives D_{2n}.
SetFamily i_family(unsigned n);

/// Conjugate a solution by a bijection: (f^-1 x f^-1) r (f x f).
SetSolution conjugate_solution(const SetSolution& sol, const std::vector<std::uint16_t>& f);

// ---------------------------------------------------------------------------
// Verdict engine
// ---------------------------------------------------------------------------

struct FamilyDescriptor {
    std::string family;  // "Vabe", "K", "N", "L", "I"
    std::variant<std::monostate, VAbeParams, KParams, NParams, unsigned> params;
};

/// Pure decision-table lookup (never invokes the symmetrizer):
/// Vabe -> closed formula; K -> k_verdict; I with n > 2 -> infinite
/// (D_{2n} rack, n > 2); L, N -> open (dihedral D_{2n+1} dimensions are an
/// open problem); I with n = 2 -> open (coefficients out of scope).
FamilyVerdict classify(const FamilyDescriptor& descriptor);

}  // namespace nichols
