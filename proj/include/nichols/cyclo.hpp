#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nichols {

using Rat = mpq_class;

/// The cyclotomic field Q(zeta_M), elements represented modulo the M-th
/// cyclotomic polynomial Phi_M so that the coefficient domain is a field.
/// Instances are interned: CycloField::get(M) returns a process-wide
/// immutable object, safe to share across threads.
class CycloField {
public:
    static const CycloField& get(unsigned order);

    unsigned order() const { return order_; }           // M
    unsigned degree() const { return degree_; }         // phi(M) = deg Phi_M

    /// Phi_M coefficients, ascending degree, monic (size degree()+1).
    const std::vector<Rat>& min_poly() const { return min_poly_; }

    /// Coordinates of zeta^t reduced mod Phi_M. Valid for t < power_table_size().
    const std::vector<Rat>& zeta_power(unsigned t) const { return pow_table_.at(t); }
    unsigned power_table_size() const { return static_cast<unsigned>(pow_table_.size()); }

    bool operator==(const CycloField& o) const { return this == &o; }

private:
    explicit CycloField(unsigned order);

    unsigned order_;
    unsigned degree_;
    std::vector<Rat> min_poly_;
    std::vector<std::vector<Rat>> pow_table_;
};

/// An element of Q(zeta_M): phi(M) exact rational coordinates in the power
/// basis 1, zeta, ..., zeta^{phi(M)-1}. Immutable value semantics; all
/// arithmetic is exact.
class CycloNum {
public:
    CycloNum() : field_(nullptr) {}
    explicit CycloNum(const CycloField& f) : field_(&f), coeffs_(f.degree()) {}
    CycloNum(const CycloField& f, std::vector<Rat> coeffs);

    static CycloNum zero(const CycloField& f) { return CycloNum(f); }
    static CycloNum one(const CycloField& f) { return from_rational(f, 1); }
    static CycloNum from_rational(const CycloField& f, Rat value);
    /// zeta_M^k, any integer k (reduced mod M).
    static CycloNum root_power(const CycloField& f, long k);

    const CycloField& field() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator/(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o) { *this = *this * o; return *this; }
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_M.
    CycloNum inverse() const;
    CycloNum pow(long e) const;

    /// Image under zeta_M -> zeta_{M'}^{M'/M}; requires M | M'.
    CycloNum embed_into(const CycloField& target) const;

    /// Order in the group of roots of unity of Q(zeta_M) (a divisor of
    /// lcm(2, M)), or nullopt if the element is not a root of unity.
    std::optional<unsigned> multiplicative_order() const;

    /// Total order (lexicographic on coordinates); used for canonical pooling.
    static int compare(const CycloNum& a, const CycloNum& b);

private:
    const CycloField* field_;
    std::vector<Rat> coeffs_;

    void check_same_field(const CycloNum& o) const;
};

/// +/- zeta_M^k, the fast path for family coefficients: every braiding
/// coefficient of the explicit families is a signed power of the ambient root.
struct RootExpr {
    unsigned order = 1;   // M
    long exp = 0;         // reduced mod M on construction
    int sign = 1;         // +1 or -1

    RootExpr() = default;
    RootExpr(unsigned order_, long exp_, int sign_ = 1);

    RootExpr operator*(const RootExpr& o) const;
    RootExpr pow(long e) const;
    RootExpr inverse() const { return pow(-1); }
    bool operator==(const RootExpr& o) const;

    CycloNum to_num() const { return to_num(CycloField::get(order)); }
    CycloNum to_num(const CycloField& f) const;
};

/// Recognize x as +/- zeta_M^t if possible (canonical form of a RootExpr).
std::optional<RootExpr> as_root_expr(const CycloNum& x);

/// True iff x^m = 1 and x^d != 1 for every proper divisor d of m.
bool is_primitive_root(const CycloNum& x, unsigned m);

}  // namespace nichols
