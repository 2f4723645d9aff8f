#include "nichols/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace nichols {

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients

int poly_degree(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

/// Exact division; throws if the remainder is nonzero.
Poly poly_div_exact(Poly num, const Poly& den) {
    int dd = poly_degree(den);
    int dn = poly_degree(num);
    if (dd < 0) throw std::invalid_argument("polynomial division by zero");
    Poly q(static_cast<std::size_t>(std::max(dn - dd + 1, 0)));
    while (dn >= dd) {
        Rat c = num[static_cast<std::size_t>(dn)] / den[static_cast<std::size_t>(dd)];
        q[static_cast<std::size_t>(dn - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            num[static_cast<std::size_t>(dn - dd + i)] -= c * den[static_cast<std::size_t>(i)];
        dn = poly_degree(num);
    }
    if (dn >= 0) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Phi_M by the divisor recursion: x^M - 1 = prod_{d | M} Phi_d.
Poly cyclotomic(unsigned M, std::map<unsigned, Poly>& memo) {
    auto it = memo.find(M);
    if (it != memo.end()) return it->second;
    Poly p(M + 1);
    p[0] = -1;
    p[M] = 1;
    for (unsigned d = 1; d < M; ++d)
        if (M % d == 0) p = poly_div_exact(std::move(p), cyclotomic(d, memo));
    memo[M] = p;
    return p;
}

}  // namespace

CycloField::CycloField(unsigned order) : order_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::map<unsigned, Poly> memo;
    min_poly_ = cyclotomic(order, memo);
    degree_ = static_cast<unsigned>(poly_degree(min_poly_));
    // zeta^t reduced, for every exponent a product of two reduced elements or
    // a root_power can produce: max(2*degree-2, order-1).
    unsigned limit = std::max(2 * degree_ >= 2 ? 2 * degree_ - 2 : 0, order_ - 1);
    pow_table_.reserve(limit + 1);
    for (unsigned t = 0; t <= limit; ++t) {
        if (t < degree_) {
            std::vector<Rat> v(degree_);
            v[t] = 1;
            pow_table_.push_back(std::move(v));
        } else {
            // zeta^t = zeta * zeta^{t-1}, then cancel the leading term against Phi_M
            const auto& prev = pow_table_[t - 1];
            std::vector<Rat> v(degree_);
            for (unsigned k = 1; k < degree_; ++k) v[k] = prev[k - 1];
            const Rat& lead = prev[degree_ - 1];
            if (lead != 0)
                for (unsigned k = 0; k < degree_; ++k) v[k] -= lead * min_poly_[k];
            pow_table_.push_back(std::move(v));
        }
    }
}

const CycloField& CycloField::get(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[order];
    if (!slot) slot.reset(new CycloField(order));
    return *slot;
}

CycloNum::CycloNum(const CycloField& f, std::vector<Rat> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != f.degree())
        throw std::invalid_argument("coefficient count must equal phi(M)");
}

const CycloField& CycloNum::field() const {
    if (!field_) throw std::logic_error("uninitialized CycloNum");
    return *field_;
}

void CycloNum::check_same_field(const CycloNum& o) const {
    if (field_ == nullptr || o.field_ == nullptr)
        throw std::logic_error("uninitialized CycloNum");
    if (field_ != o.field_)
        throw std::invalid_argument("cyclotomic field mismatch");
}

CycloNum CycloNum::from_rational(const CycloField& f, Rat value) {
    CycloNum r(f);
    r.coeffs_[0] = std::move(value);
    return r;
}

CycloNum CycloNum::root_power(const CycloField& f, long k) {
    long m = static_cast<long>(f.order());
    long t = ((k % m) + m) % m;
    CycloNum r(f);
    r.coeffs_ = f.zeta_power(static_cast<unsigned>(t));
    return r;
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    CycloNum r(*this);
    r += o;
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    CycloNum r(*this);
    r -= o;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    check_same_field(o);
    const unsigned n = field_->degree();
    std::vector<Rat> conv(2 * n - 1);
    for (unsigned i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    CycloNum r(*field_);
    for (unsigned t = 0; t < n; ++t) r.coeffs_[t] = std::move(conv[t]);
    for (unsigned t = n; t < 2 * n - 1; ++t) {
        if (conv[t] == 0) continue;
        const auto& red = field_->zeta_power(t);
        for (unsigned k = 0; k < n; ++k)
            if (red[k] != 0) r.coeffs_[k] += conv[t] * red[k];
    }
    return r;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_M)");
    const unsigned n = field().degree();
    // extended Euclid on (Phi_M, this): r0*? + s0*this-ish bookkeeping,
    // tracking only the cofactor of `this`.
    Poly r0 = field_->min_poly();
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly s0{Rat(0)}, s1{Rat(1)};
    auto sub_scaled = [](Poly& p, const Poly& q, const Rat& c, int shift) {
        if (p.size() < q.size() + static_cast<std::size_t>(shift))
            p.resize(q.size() + static_cast<std::size_t>(shift));
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) p[i + static_cast<std::size_t>(shift)] -= c * q[i];
    };
    while (poly_degree(r1) > 0) {
        int d1 = poly_degree(r1);
        while (true) {
            int d0 = poly_degree(r0);
            if (d0 < d1) break;
            Rat c = r0[static_cast<std::size_t>(d0)] / r1[static_cast<std::size_t>(d1)];
            sub_scaled(r0, r1, c, d0 - d1);
            sub_scaled(s0, s1, c, d0 - d1);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (poly_degree(r1) != 0) throw std::domain_error("element not invertible mod Phi_M");
    const Rat lead = r1[0];
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < s1.size() && i < n; ++i) out[i] = s1[i] / lead;
    return CycloNum(*field_, std::move(out));
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base(*this), r = CycloNum::one(field());
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (field_ != o.field_) return false;
    return coeffs_ == o.coeffs_;
}

CycloNum CycloNum::embed_into(const CycloField& target) const {
    const unsigned m = field().order();
    const unsigned mp = target.order();
    if (mp % m != 0)
        throw std::invalid_argument("embedding requires the source order to divide the target order");
    const unsigned ratio = mp / m;
    CycloNum r(target);
    for (unsigned t = 0; t < field_->degree(); ++t) {
        if (coeffs_[t] == 0) continue;
        const auto& img = target.zeta_power(t * ratio);
        for (unsigned k = 0; k < target.degree(); ++k)
            if (img[k] != 0) r.coeffs_[k] += coeffs_[t] * img[k];
    }
    return r;
}

std::optional<unsigned> CycloNum::multiplicative_order() const {
    if (is_zero()) return std::nullopt;
    const unsigned m = field().order();
    const unsigned L = (m % 2 == 0) ? m : 2 * m;  // torsion of Q(zeta_M)^x
    if (!pow(static_cast<long>(L)).is_one()) return std::nullopt;
    for (unsigned d = 1; d <= L; ++d)
        if (L % d == 0 && pow(static_cast<long>(d)).is_one()) return d;
    return std::nullopt;  // unreachable
}

int CycloNum::compare(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) {
        unsigned ma = a.field_ ? a.field_->order() : 0;
        unsigned mb = b.field_ ? b.field_->order() : 0;
        return ma < mb ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

RootExpr::RootExpr(unsigned order_, long exp_, int sign_) : order(order_), sign(sign_) {
    if (order == 0) throw std::invalid_argument("root order must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    long m = static_cast<long>(order);
    exp = ((exp_ % m) + m) % m;
}

RootExpr RootExpr::operator*(const RootExpr& o) const {
    if (order != o.order) throw std::invalid_argument("root order mismatch");
    return RootExpr(order, exp + o.exp, sign * o.sign);
}

RootExpr RootExpr::pow(long e) const {
    long ex = exp * e;  // fits: exponents stay small in practice
    int sg = (e % 2 == 0) ? 1 : sign;
    return RootExpr(order, ex, sg);
}

bool RootExpr::operator==(const RootExpr& o) const {
    return order == o.order && exp == o.exp && sign == o.sign;
}

CycloNum RootExpr::to_num(const CycloField& f) const {
    if (f.order() % order != 0)
        throw std::invalid_argument("root order does not divide the field order");
    CycloNum v = CycloNum::root_power(f, exp * static_cast<long>(f.order() / order));
    return sign < 0 ? -v : v;
}

std::optional<RootExpr> as_root_expr(const CycloNum& x) {
    const CycloField& f = x.field();
    for (unsigned t = 0; t < f.order(); ++t) {
        CycloNum p = CycloNum::root_power(f, static_cast<long>(t));
        if (x == p) return RootExpr(f.order(), static_cast<long>(t), 1);
        if (x == -p) return RootExpr(f.order(), static_cast<long>(t), -1);
    }
    return std::nullopt;
}

bool is_primitive_root(const CycloNum& x, unsigned m) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (!x.pow(static_cast<long>(m)).is_one()) return false;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0 && x.pow(static_cast<long>(d)).is_one()) return false;
    return true;
}

}  // namespace nichols
