#include "nichols/families.hpp"

#include <functional>
#include <numeric>
#include <string>

namespace nichols {

namespace {

int pm_pow(int base, long e) {  // (+-1)^e
    if (base == 1) return 1;
    return (((e % 2) + 2) % 2 == 0) ? 1 : -1;
}

/// Signed power of the ambient root: the value sign * omega^exp in Q(zeta_M).
struct RootCoef {
    int sign = 1;
    long exp = 0;

    RootCoef operator*(const RootCoef& o) const { return {sign * o.sign, exp + o.exp}; }
    RootCoef operator/(const RootCoef& o) const { return {sign * o.sign, exp - o.exp}; }
    CycloNum to_num(const CycloField& f) const {
        return RootExpr(f.order(), exp, sign).to_num(f);
    }
};

/// Target of one braiding case line, 1-based indices.
struct CaseEntry {
    unsigned first, second;
    RootCoef coeff;
};

using CaseLine = std::function<std::optional<CaseEntry>(unsigned, unsigned)>;

/// Apply a case list at (a, b), requiring exactly one line to match:
/// uncovered or doubly-covered pairs are construction errors.
CaseEntry apply_case_lines(const std::vector<CaseLine>& lines, unsigned a, unsigned b,
                           const char* table) {
    std::optional<CaseEntry> hit;
    unsigned count = 0;
    for (const auto& line : lines) {
        auto e = line(a, b);
        if (e) {
            ++count;
            hit = e;
        }
    }
    if (count != 1)
        throw std::logic_error(std::string(table) + ": pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ") covered by " + std::to_string(count) +
                               " case lines");
    return *hit;
}

MonomialBraiding braiding_from_cases(unsigned dim, const CycloField& f,
                                     const std::vector<CaseLine>& lines, const char* table) {
    MonomialBraiding br(dim, f);
    for (unsigned a = 1; a <= dim; ++a)
        for (unsigned b = 1; b <= dim; ++b) {
            CaseEntry e = apply_case_lines(lines, a, b, table);
            if (e.first < 1 || e.first > dim || e.second < 1 || e.second > dim)
                throw std::logic_error(std::string(table) + ": target out of range at (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
            br.set(a - 1, b - 1, e.first - 1, e.second - 1, e.coeff.to_num(f));
        }
    return br;
}

}  // namespace

// ---------------------------------------------------------------------------
// V_abe
// ---------------------------------------------------------------------------

MonomialBraiding v_abe(const VAbeParams& p) {
    if (p.a.is_zero() || p.b.is_zero() || p.e.is_zero())
        throw std::invalid_argument("V_abe parameters must be nonzero");
    const CycloField& f = p.a.field();
    if (&p.b.field() != &f || &p.e.field() != &f)
        throw std::invalid_argument("V_abe parameters must share one field");
    MonomialBraiding br(2, f);
    br.set(0, 0, 1, 1, p.a);
    br.set(0, 1, 0, 1, p.b);
    br.set(1, 0, 1, 0, p.b);
    br.set(1, 1, 0, 0, p.e);
    return br;
}

VAbeDiagonalization v_abe_diagonalize(const VAbeParams& p) {
    const CycloField& f = p.a.field();
    auto ra = as_root_expr(p.a);
    auto re = as_root_expr(p.e);
    if (!ra || !re)
        throw std::invalid_argument(
            "a and e must be signed powers of the ambient root; "
            "re-express the parameters in a larger cyclotomic field");
    const long M = static_cast<long>(f.order());
    const CycloField& big = CycloField::get(static_cast<unsigned>(8 * M));

    // ae as a power of zeta_{8M}; its square root halves the exponent.
    long ae_exp = 8 * (ra->exp + re->exp) + ((ra->sign * re->sign < 0) ? 4 * M : 0);
    CycloNum sqrt_ae = CycloNum::root_power(big, ae_exp / 2);
    CycloNum b_big = p.b.embed_into(big);

    VAbeDiagonalization out;
    out.sqrt_ae = sqrt_ae;
    out.iso_form = v_abe(VAbeParams{sqrt_ae, b_big, sqrt_ae});

    MonomialOperator swap;
    swap.image = {1, 0};
    swap.coeff = {CycloNum::one(big), CycloNum::one(big)};
    TwistConjugation conj =
        twist_conjugate(out.iso_form, TwistPair{swap, MonomialOperator::identity(big, 2)});
    if (!conj.equal) throw std::logic_error("swap twist of the symmetric form must self-agree");
    out.diagonal = conj.tilde;
    return out;
}

FamilyVerdict v_abe_verdict(const VAbeParams& p) {
    if (p.a.is_zero() || p.b.is_zero() || p.e.is_zero())
        throw std::invalid_argument("V_abe parameters must be nonzero");
    const CycloField& f = p.a.field();
    CycloNum ae = p.a * p.e;
    const CycloNum one = CycloNum::one(f);

    if (ae == p.b * p.b && is_primitive_root(p.b, 3))
        return {FamilyVerdict::Kind::finite, 27, "Cartan A2", "ae=b^2, b^3=1!=b"};
    if (p.b == -one) {
        if (auto m = ae.multiplicative_order())
            return {FamilyVerdict::Kind::finite, 4ul * *m, "super A2(q;I2)", "b=-1, ae in G_m"};
    }
    if (ae == one) {
        if (auto m = p.b.multiplicative_order(); m && *m >= 2)
            return {FamilyVerdict::Kind::finite, static_cast<unsigned long>(*m) * *m,
                    "Cartan A1xA1", "ae=1, b in G_m"};
    }
    return {FamilyVerdict::Kind::infinite, 0, "", "otherwise"};
}

// ---------------------------------------------------------------------------
// K family
// ---------------------------------------------------------------------------

void KParams::validate() const {
    if (N < 1 || n < 1) throw std::invalid_argument("K family: N and n must be >= 1");
    if (mu != 1 && mu != -1) throw std::invalid_argument("K family: mu must be +-1");
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("K family: lambda must be +-1");
    bool j_ok = (lambda == -1) ? (j == 1 || j == 3) : (j == 2 || j == 4);
    if (!j_ok)
        throw std::invalid_argument("K family: j must be 1 or 3 when lambda=-1, 2 or 4 when lambda=1");
    if (k >= N) throw std::invalid_argument("K family: k must lie in [0, N-1]");
    if (p != 0 && p != 1) throw std::invalid_argument("K family: p must be 0 or 1");
    if (s < 1 || s > N) throw std::invalid_argument("K family: s must lie in [1, N]");
}

namespace {

struct KScalars {
    long KE, JE;  // omega-exponents of K and J
    long n, s;
    int mu, lambda, p;

    // (-1)^{pbit} lambda^{lam_exp} (mu K)^{muk_exp} J^{j_exp}
    RootCoef coeff(int pbit, long lam_exp, long muk_exp, long j_exp) const {
        int sg = pm_pow(-1, pbit) * pm_pow(lambda, lam_exp) * pm_pow(mu, muk_exp);
        return {sg, KE * muk_exp + JE * j_exp};
    }
};

KScalars k_scalars(const KParams& p) {
    const long M = 8l * p.n * p.N;
    return KScalars{(8l * p.n * p.k) % M, (2l * p.j * p.N) % M,
                    static_cast<long>(p.n), static_cast<long>(p.s), p.mu, p.lambda, p.p};
}

/// x_1 = 1, x_{2k} = (J^{-1} K mu)^{n-2k+1}, x_{2k+1} = lambda (J K mu)^{-n+2k}.
std::vector<RootCoef> k_x_sequence(const KParams& p) {
    KScalars sc = k_scalars(p);
    std::vector<RootCoef> xs(2 * p.n + 1);
    xs[1] = RootCoef{1, 0};
    for (unsigned kk = 1; kk <= p.n; ++kk) {
        long e = sc.n - 2l * kk + 1;
        xs[2 * kk] = RootCoef{pm_pow(p.mu, e), (sc.KE - sc.JE) * e};
    }
    for (unsigned kk = 1; kk + 1 <= p.n; ++kk) {
        long e = -sc.n + 2l * kk;
        xs[2 * kk + 1] = RootCoef{p.lambda * pm_pow(p.mu, e), (sc.KE + sc.JE) * e};
    }
    return xs;
}

}  // namespace

MonomialBraiding k_braiding(const KParams& par) {
    par.validate();
    const unsigned n = par.n, d = 2 * n;
    const CycloField& f = CycloField::get(par.field_order());
    KScalars sc = k_scalars(par);

    std::vector<CaseLine> lines;
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a != 1) return std::nullopt;
        return CaseEntry{b, 1, sc.coeff(sc.p, 0, sc.s, 0)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 0) return std::nullopt;
        long div = (b + 2l * a - 2) / (2 * n), rem = (b + 2l * a - 2) % (2 * n);
        if (rem != 0) return std::nullopt;
        return CaseEntry{2 * n, 2 * n - a + 2,
                         sc.coeff(sc.p, div, sc.s + sc.n * (div - 2), sc.n * (div - 2))};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 0) return std::nullopt;
        long div = (b + 2l * a - 2) / (2 * n), rem = (b + 2l * a - 2) % (2 * n);
        if (rem == 0) return std::nullopt;
        return CaseEntry{static_cast<unsigned>(rem), 2 * n - a + 2,
                         sc.coeff(sc.p, div + 1, sc.s + sc.n * (div - 1), sc.n * (div - 1))};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 1) return std::nullopt;
        long div = (2l * n + 1 - b + 2 * a - 2) / (2 * n), rem = (2l * n + 1 - b + 2 * a - 2) % (2 * n);
        if (rem != 0) return std::nullopt;
        return CaseEntry{1, 2 * n - a + 2,
                         sc.coeff(sc.p, div, sc.s - sc.n * div - 2 + 2l * a, -sc.n * div)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 1) return std::nullopt;
        long div = (2l * n + 1 - b + 2 * a - 2) / (2 * n), rem = (2l * n + 1 - b + 2 * a - 2) % (2 * n);
        if (rem == 0) return std::nullopt;
        return CaseEntry{static_cast<unsigned>(2 * n + 1 - rem), 2 * n - a + 2,
                         sc.coeff(sc.p, div + 1, sc.s - sc.n * (div + 1) - 2 + 2l * a,
                                  -sc.n * (div + 1))};
    });
    return braiding_from_cases(d, f, lines, "K braiding");
}

TwistPair k_twist(const KParams& par) {
    par.validate();
    const unsigned n = par.n, d = 2 * n;
    const CycloField& f = CycloField::get(par.field_order());
    auto xs = k_x_sequence(par);

    TwistPair t;
    t.phi1.image.resize(d);
    t.phi1.coeff.resize(d);
    t.phi2.image.resize(d);
    t.phi2.coeff.resize(d);
    for (unsigned b = 1; b <= d; ++b) {
        unsigned img1 = (b % 2 == 1 && b != 1) ? (2 * n + 2 - b) : b;
        t.phi1.image[b - 1] = img1 - 1;
        t.phi1.coeff[b - 1] = xs[b].to_num(f);
        unsigned img2 = (b % 2 == 0) ? (2 * n + 2 - b) : b;
        t.phi2.image[b - 1] = img2 - 1;
        t.phi2.coeff[b - 1] = CycloNum::one(f);
    }
    return t;
}

MonomialBraiding k_closed_form(const KParams& par, TwistVariant variant) {
    par.validate();
    const unsigned n = par.n, d = 2 * n;
    const CycloField& f = CycloField::get(par.field_order());
    KScalars sc = k_scalars(par);
    auto xs = k_x_sequence(par);
    const bool bar = (variant == TwistVariant::bar);

    // Psi_E / Psi_O per parity block; quotient and remainder mod 2n drive the
    // case split.
    auto psi_even = [&, n](unsigned a, unsigned b) -> long {
        if (bar) {
            if (a % 2 == 0 && b % 2 == 0) return 4l * n + 2 + b - 2 * a;
            if (a % 2 == 1 && b == 1) return 2l * a - 1;
            return 2l * n + 2 * a - b;  // a odd, b != 1 odd
        }
        return (a % 2 == 0) ? (2l * n + 2 * a - b) : (4l * n + 2 + b - 2 * a);
    };
    auto psi_odd = [&, n](unsigned a, unsigned b) -> long {
        if (bar) {
            if (a % 2 == 0 && b == 1) return 6l * n + 2 - 2 * a;
            if (a % 2 == 0) return 4l * n + 1 + b - 2 * a;
            return 2l * n - 1 + 2 * a - b;  // a odd, b even
        }
        return (a % 2 == 0) ? (2l * n - 1 + 2 * a - b) : (4l * n + 1 + b - 2 * a);
    };
    auto xratio = [&](unsigned num, unsigned den) { return xs[num] / xs[den]; };

    std::vector<CaseLine> lines;
    // a = 1
    lines.push_back([&](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a != 1) return std::nullopt;
        RootCoef base = sc.coeff(sc.p, 0, sc.s, 0);
        if (b == 1) return CaseEntry{1, 1, base};
        RootCoef ratio = bar ? xratio(b, 1) : xratio(1, 2 * n + 2 - b);
        return CaseEntry{2 * n + 2 - b, 1, ratio * base};
    });
    // a != 1, even a+b
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 0) return std::nullopt;
        long P = psi_even(a, b);
        long div = P / (2 * n), rem = P % (2 * n);
        if (rem == 0) {
            RootCoef c = sc.coeff(sc.p, div, sc.s + sc.n * (div - 2), sc.n * (div - 2));
            unsigned target = bar ? 2 : 2 * n;
            RootCoef ratio = bar ? xratio(b, a) : xratio(a, 2 * n);
            return CaseEntry{target, a, ratio * c};
        }
        RootCoef c = sc.coeff(sc.p, div + 1, sc.s + sc.n * (div - 1), sc.n * (div - 1));
        unsigned target;
        if (bar)
            target = (rem % 2 == 0) ? static_cast<unsigned>(2 * n + 2 - rem)
                                    : static_cast<unsigned>(rem);
        else
            target = (rem % 2 == 0) ? static_cast<unsigned>(rem)
                     : (rem == 1)   ? 1u
                                    : static_cast<unsigned>(2 * n + 2 - rem);
        RootCoef ratio = bar ? xratio(b, a) : xratio(a, target);
        return CaseEntry{target, a, ratio * c};
    });
    // a != 1, odd a+b
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a == 1 || (a + b) % 2 != 1) return std::nullopt;
        long P = psi_odd(a, b);
        long div = P / (2 * n), rem = P % (2 * n);
        if (rem == 0) {
            long muk = bar ? (sc.s + sc.n * (4 - div) + 2 - 2l * a) : (sc.s - sc.n * div + 2l * a - 2);
            RootCoef c = sc.coeff(sc.p, div, muk, -sc.n * div);
            RootCoef ratio = bar ? xratio(b, a) : xratio(a, 1);
            return CaseEntry{1, a, ratio * c};
        }
        unsigned target;
        long muk;
        if (bar) {
            target = (rem % 2 == 0) ? static_cast<unsigned>(2 * n + 1 - rem)
                                    : static_cast<unsigned>(1 + rem);
            muk = (rem % 2 == 0) ? (sc.s + sc.n * (3 - div) + 2 - 2l * a)
                                 : (sc.s - sc.n * (div + 1) - 2 + 2l * a);
        } else {
            target = (rem % 2 == 0) ? static_cast<unsigned>(rem + 1)
                                    : static_cast<unsigned>(2 * n + 1 - rem);
            muk = (rem % 2 == 0) ? (sc.s - sc.n * (div + 1) + 2l * a - 2)
                                 : (sc.s + sc.n * (3 - div) - 2l * a + 2);
        }
        RootCoef c = sc.coeff(sc.p, div + 1, muk, -sc.n * (div + 1));
        RootCoef ratio = bar ? xratio(b, a) : xratio(a, target);
        return CaseEntry{target, a, ratio * c};
    });
    return braiding_from_cases(d, f, lines,
                               bar ? "K closed form (bar)" : "K closed form (tilde)");
}

FamilyVerdict k_verdict(const KParams& par) {
    par.validate();
    const CycloField& f = CycloField::get(par.field_order());
    KScalars sc = k_scalars(par);
    CycloNum q = sc.coeff(sc.p, 0, sc.s, 0).to_num(f);
    const CycloNum one = CycloNum::one(f);
    const CycloNum lam = (par.lambda == 1) ? one : -one;

    if (par.n == 1) {
        if (lam * q * q == one && q != one) {
            unsigned m = *q.multiplicative_order();
            return {FamilyVerdict::Kind::finite, static_cast<unsigned long>(m) * m,
                    "Cartan A1xA1", "lambda q^2 = 1 != q"};
        }
        if (lam * q * q * q == one && q != one) {
            unsigned long m = *q.multiplicative_order();
            return {FamilyVerdict::Kind::finite, m * m * m, "Cartan A2", "lambda q^3 = 1 != q"};
        }
        return {FamilyVerdict::Kind::infinite, 0, "", "n=1, otherwise"};
    }
    if (par.n == 2) {
        if (q == -one && par.lambda == 1)
            return {FamilyVerdict::Kind::finite, 64, "Cartan A2xA2", "q=-1 and lambda=1"};
        return {FamilyVerdict::Kind::infinite, 0, "", "n=2, otherwise"};
    }
    return {FamilyVerdict::Kind::infinite, 0, "", "D_{2n} rack, n>2"};
}

// ---------------------------------------------------------------------------
// N family
// ---------------------------------------------------------------------------

void NParams::validate() const {
    if (N < 1 || n < 1) throw std::invalid_argument("N family: N and n must be >= 1");
    if (mu != 1 && mu != -1) throw std::invalid_argument("N family: mu must be +-1");
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("N family: lambda must be +-1");
    if (k >= N) throw std::invalid_argument("N family: k must lie in [0, N-1]");
    if (p != 0 && p != 1) throw std::invalid_argument("N family: p must be 0 or 1");
    if (q != 0 && q != 1) throw std::invalid_argument("N family: q must be 0 or 1");
    if (s < 1 || s > N) throw std::invalid_argument("N family: s must lie in [1, N]");
}

namespace {

struct NScalars {
    long BE;  // omega-exponent of B
    long n, s;
    int p, q, lambda;

    RootCoef B(long e) const { return {1, BE * e}; }
    RootCoef coeff(int sgn, long b_exp) const { return {sgn, BE * b_exp}; }
};

NScalars n_scalars(const NParams& p) {
    const long M = 8l * p.N * (2 * p.n + 1);
    long BE = ((p.mu == -1 ? M / 4 : 0) + 2l * p.k * (2 * p.n + 1)) % M;
    return NScalars{BE, static_cast<long>(p.n), static_cast<long>(p.s), p.p, p.q, p.lambda};
}

/// x_1 = 1, x_{2k} = lambda B^{4n-4k+2}, x_{2k+1} = B^{4k}.
std::vector<RootCoef> n_x_sequence(const NParams& p) {
    NScalars sc = n_scalars(p);
    std::vector<RootCoef> xs(2 * p.n + 2);
    xs[1] = RootCoef{1, 0};
    for (unsigned kk = 1; kk <= p.n; ++kk) {
        xs[2 * kk] = RootCoef{p.lambda, sc.BE * (4l * sc.n - 4 * kk + 2)};
        xs[2 * kk + 1] = RootCoef{1, sc.BE * (4l * kk)};
    }
    return xs;
}

}  // namespace

MonomialBraiding n_braiding(const NParams& par) {
    par.validate();
    const unsigned n = par.n, d = 2 * n + 1;
    const CycloField& f = CycloField::get(par.field_order());
    NScalars sc = n_scalars(par);

    // R^g and L^g: reflection maps with B-power coefficients.
    auto Rg = [&, n](long g, unsigned al, unsigned be) -> CaseEntry {
        if (be + g <= 2 * n + 1)
            return {static_cast<unsigned>(be + g), 2 * n - al + 2, RootCoef{1, 0}};
        if (be + g == 2 * n + 2)
            return {2 * n + 1, 2 * n - al + 2, RootCoef{pm_pow(-1, sc.p) * sc.lambda, sc.BE}};
        return {static_cast<unsigned>(4 * n + 3 - g - be), 2 * n - al + 2,
                RootCoef{pm_pow(-1, sc.p) * sc.lambda, sc.BE * (2 * (g + be) - 4l * n - 3)}};
    };
    auto Lg = [&, n](long g, unsigned al, unsigned be) -> CaseEntry {
        if (g < be) return {static_cast<unsigned>(be - g), 2 * n - al + 2, RootCoef{1, sc.BE * 2 * g}};
        return {static_cast<unsigned>(g - be + 1), 2 * n - al + 2,
                RootCoef{pm_pow(-1, sc.p), sc.BE * (2l * be - 1)}};
    };

    std::vector<CaseLine> lines;
    lines.push_back([&, n](unsigned al, unsigned be) -> std::optional<CaseEntry> {
        if (al != n + 1) return std::nullopt;
        return CaseEntry{be, n + 1, sc.coeff(pm_pow(-1, sc.q), 2 * (sc.n + sc.s))};
    });
    lines.push_back([&, n, Lg](unsigned al, unsigned be) -> std::optional<CaseEntry> {
        if (!(al < n + 1 && (al + be) % 2 == 0)) return std::nullopt;
        CaseEntry e = Lg(2l * (n - al + 1), al, be);
        e.coeff = sc.coeff(pm_pow(-1, sc.q), 2 * (2l * al + sc.s - sc.n - 2)) * e.coeff;
        return e;
    });
    lines.push_back([&, n, Lg](unsigned al, unsigned be) -> std::optional<CaseEntry> {
        if (!(al > n + 1 && (al + be) % 2 == 1)) return std::nullopt;
        CaseEntry e = Lg(2l * (al - 1 - n), al, be);
        e.coeff = sc.coeff(pm_pow(-1, sc.q), 2 * (sc.s + sc.n)) * e.coeff;
        return e;
    });
    lines.push_back([&, n, Rg](unsigned al, unsigned be) -> std::optional<CaseEntry> {
        if (!(al < n + 1 && (al + be) % 2 == 1)) return std::nullopt;
        CaseEntry e = Rg(2l * (n - al + 1), al, be);
        e.coeff = sc.coeff(pm_pow(-1, sc.q), 2 * (2l * al + sc.s - sc.n - 2)) * e.coeff;
        return e;
    });
    lines.push_back([&, n, Rg](unsigned al, unsigned be) -> std::optional<CaseEntry> {
        if (!(al > n + 1 && (al + be) % 2 == 0)) return std::nullopt;
        CaseEntry e = Rg(2l * (al - 1 - n), al, be);
        e.coeff = sc.coeff(pm_pow(-1, sc.q), 2 * (sc.s + sc.n)) * e.coeff;
        return e;
    });
    return braiding_from_cases(d, f, lines, "N braiding");
}

TwistPair n_twist(const NParams& par) {
    par.validate();
    const unsigned n = par.n, d = 2 * n + 1;
    const CycloField& f = CycloField::get(par.field_order());
    auto xs = n_x_sequence(par);

    TwistPair t;
    t.phi1.image.resize(d);
    t.phi1.coeff.resize(d);
    t.phi2.image.resize(d);
    t.phi2.coeff.resize(d);
    for (unsigned a = 1; a <= d; ++a) {
        unsigned img1 = (a % 2 == 1) ? (2 * n + 2 - a) : a;
        t.phi1.image[a - 1] = img1 - 1;
        t.phi1.coeff[a - 1] = xs[a].to_num(f);
        unsigned img2 = (a % 2 == 1) ? a : (2 * n + 2 - a);
        t.phi2.image[a - 1] = img2 - 1;
        t.phi2.coeff[a - 1] = CycloNum::one(f);
    }
    return t;
}

MonomialBraiding n_closed_form(const NParams& par, TwistVariant variant) {
    par.validate();
    const unsigned n = par.n, d = 2 * n + 1;
    const CycloField& f = CycloField::get(par.field_order());
    NScalars sc = n_scalars(par);
    auto xs = n_x_sequence(par);
    const bool bar = (variant == TwistVariant::bar);
    const int P = pm_pow(-1, sc.p), Q = pm_pow(-1, sc.q);
    const int L = sc.lambda;
    auto xratio = [&](unsigned num, unsigned den) { return xs[num] / xs[den]; };
    auto ratio_for = [&](unsigned a, unsigned b, unsigned target) {
        return bar ? xratio(b, a) : xratio(a, target);
    };

    std::vector<CaseLine> lines;
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (a != n + 1) return std::nullopt;
        unsigned target = 2 * n + 2 - b;
        RootCoef ratio = bar ? xratio(b, n + 1) : xratio(n + 1, target);
        return CaseEntry{target, n + 1, ratio * sc.coeff(Q, 2 * sc.n + 2 * sc.s)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (!(a < n + 1 && 2 * a > b)) return std::nullopt;  // a < n+1, 2a-b > 0
        unsigned g = 2 * a - b;
        long be;
        if ((a + b) % 2 == 0) be = 2 * sc.n + 2 * sc.s;
        else if ((bar ? (a % 2 == 1) : (a % 2 == 0)))
            be = 4l * a + 2 * sc.s - 2 * sc.n - 4;
        else
            be = 6l * sc.n + 4 + 2 * sc.s - 4 * a;
        return CaseEntry{g, a, ratio_for(a, b, g) * sc.coeff(Q, be)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        // tilde merges 2a-b = 0 into the reflected line; bar keeps it separate
        if (!(a < n + 1 && 2 * a == b && bar)) return std::nullopt;
        long be = (a % 2 == 0) ? (2 * sc.n + 1 + 2 * sc.s) : (-2 * sc.n - 3 + 4l * a + 2 * sc.s);
        return CaseEntry{2 * n + 1, a, ratio_for(a, b, 2 * n + 1) * sc.coeff(P * Q * L, be)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (!(a < n + 1 && (bar ? 2 * a < b : 2 * a <= b))) return std::nullopt;
        unsigned g = 2 * n + 1 + 2 * a - b;
        int sgn;
        long be;
        if (a % 2 == 0 && b % 2 == 0) {
            sgn = bar ? P * Q * L : P * Q;
            be = bar ? (2 * sc.n + 1 - 4l * a + 2 * b + 2 * sc.s)
                     : (2 * sc.n - 1 + 4l * a - 2 * b + 2 * sc.s);
        } else if (a % 2 == 1 && b % 2 == 1) {
            sgn = bar ? P * Q : P * Q * L;
            be = bar ? (2 * sc.n - 1 + 4l * a - 2 * b + 2 * sc.s)
                     : (2 * sc.n + 1 - 4l * a + 2 * b + 2 * sc.s);
        } else if ((bar ? (a % 2 == 1) : (a % 2 == 0))) {  // (odd,even) bar / (even,odd) tilde
            sgn = P * Q * L;
            be = -2 * sc.n - 3 + 2l * b + 2 * sc.s;
        } else {
            sgn = P * Q;
            be = 6l * sc.n + 3 - 2 * b + 2 * sc.s;
        }
        return CaseEntry{g, a, ratio_for(a, b, g) * sc.coeff(sgn, be)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (!(a > n + 1 && 2 * a - b <= 2 * n + 1)) return std::nullopt;
        unsigned g = 2 * a - b;
        long be;
        if ((a + b) % 2 == 0) be = 2 * sc.n + 2 * sc.s;
        else if ((bar ? (a % 2 == 1) : (a % 2 == 0)))
            be = -2 * sc.n - 4 + 4l * a + 2 * sc.s;
        else
            be = 6l * sc.n + 4 - 4 * a + 2 * sc.s;
        return CaseEntry{g, a, ratio_for(a, b, g) * sc.coeff(Q, be)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        // tilde keeps 2a-b = 2n+2 separate; bar merges it into the >= branch
        if (!(a > n + 1 && 2 * a - b == 2 * n + 2 && !bar)) return std::nullopt;
        long be = (a % 2 == 0) ? (2 * sc.n + 1 + 2 * sc.s) : (6l * sc.n + 5 - 4 * a + 2 * sc.s);
        return CaseEntry{1, a, ratio_for(a, b, 1) * sc.coeff(P * Q * L, be)};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<CaseEntry> {
        if (!(a > n + 1 && (bar ? 2 * a - b >= 2 * n + 2 : 2 * a - b > 2 * n + 2)))
            return std::nullopt;
        unsigned g = 2 * a - b - 2 * n - 1;
        int sgn;
        long be;
        if (a % 2 == 0 && b % 2 == 0) {
            sgn = bar ? P * Q : P * Q * L;
            be = bar ? (6l * sc.n + 3 - 4 * a + 2 * b + 2 * sc.s)
                     : (-2 * sc.n - 3 + 4l * a - 2 * b + 2 * sc.s);
        } else if (a % 2 == 1 && b % 2 == 1) {
            sgn = bar ? P * Q * L : P * Q;
            be = bar ? (-2 * sc.n - 3 + 4l * a - 2 * b + 2 * sc.s)
                     : (6l * sc.n + 3 - 4 * a + 2 * b + 2 * sc.s);
        } else if (a % 2 == 0) {  // (even, odd)
            sgn = bar ? P * Q * L : P * Q;
            be = bar ? (2 * sc.n + 1 - 2l * b + 2 * sc.s) : (2 * sc.n - 1 + 2l * b + 2 * sc.s);
        } else {  // (odd, even)
            sgn = bar ? P * Q : P * Q * L;
            be = bar ? (2 * sc.n - 1 + 2l * b + 2 * sc.s) : (2 * sc.n + 1 - 2l * b + 2 * sc.s);
        }
        return CaseEntry{g, a, ratio_for(a, b, g) * sc.coeff(sgn, be)};
    });
    return braiding_from_cases(d, f, lines,
                               bar ? "N closed form (bar)" : "N closed form (tilde)");
}

// ---------------------------------------------------------------------------
// L and I families
// ---------------------------------------------------------------------------

namespace {

SetSolution solution_from_rule(
    unsigned m, const std::function<std::pair<unsigned, unsigned>(unsigned, unsigned)>& rule) {
    std::vector<std::vector<std::uint16_t>> sig(m, std::vector<std::uint16_t>(m));
    std::vector<std::vector<std::uint16_t>> ta(m, std::vector<std::uint16_t>(m));
    for (unsigned a = 1; a <= m; ++a)
        for (unsigned b = 1; b <= m; ++b) {
            auto [u, v] = rule(a, b);
            if (u < 1 || u > m || v < 1 || v > m)
                throw std::logic_error("solution target out of range at (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")");
            sig[a - 1][b - 1] = static_cast<std::uint16_t>(u - 1);
            ta[b - 1][a - 1] = static_cast<std::uint16_t>(v - 1);
        }
    return SetSolution(m, std::move(sig), std::move(ta));
}

using SetLine = std::function<std::optional<std::pair<unsigned, unsigned>>(unsigned, unsigned)>;

std::pair<unsigned, unsigned> apply_set_lines(const std::vector<SetLine>& lines, unsigned a,
                                              unsigned b, const char* table) {
    std::optional<std::pair<unsigned, unsigned>> hit;
    unsigned count = 0;
    for (const auto& line : lines)
        if (auto e = line(a, b)) {
            ++count;
            hit = e;
        }
    if (count != 1)
        throw std::logic_error(std::string(table) + ": pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ") covered by " + std::to_string(count) +
                               " case lines");
    return *hit;
}

}  // namespace

SetSolution conjugate_solution(const SetSolution& sol, const std::vector<std::uint16_t>& f) {
    const unsigned m = sol.size;
    if (f.size() != m) throw std::invalid_argument("bijection size mismatch");
    std::vector<std::uint16_t> finv(m);
    for (unsigned i = 0; i < m; ++i) finv[f[i]] = static_cast<std::uint16_t>(i);
    std::vector<std::vector<std::uint16_t>> sig(m, std::vector<std::uint16_t>(m));
    std::vector<std::vector<std::uint16_t>> ta(m, std::vector<std::uint16_t>(m));
    for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) {
            auto [u, v] = sol.r(f[x], f[y]);
            sig[x][y] = finv[u];
            ta[y][x] = finv[v];
        }
    return SetSolution(m, std::move(sig), std::move(ta));
}

SetFamily l_family(unsigned n) {
    if (n < 1) throw std::invalid_argument("L family: n must be >= 1");
    const unsigned m = 2 * n + 1;

    std::vector<SetLine> lines;
    // odd a+b: decompose b + (2a-1) = d1(2n+1) + d0. The first line is the
    // d1 = 0 block (totality forces this reading of the case list).
    auto odd_decomp = [m](unsigned a, unsigned b) {
        unsigned v = b + 2 * a - 1;
        return std::pair<unsigned, unsigned>{v / m, v % m};
    };
    lines.push_back([&, m](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 0) return std::nullopt;
        auto [d1, d0] = odd_decomp(a, b);
        if (d1 != 0) return std::nullopt;
        return std::pair<unsigned, unsigned>{b + 2 * a - 1, a};
    });
    lines.push_back([&, m](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 0) return std::nullopt;
        auto [d1, d0] = odd_decomp(a, b);
        if (!(d1 == 1 && d0 == 0)) return std::nullopt;
        return std::pair<unsigned, unsigned>{m, a};
    });
    lines.push_back([&, n](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 0) return std::nullopt;
        auto [d1, d0] = odd_decomp(a, b);
        if (!(d1 == 1 && d0 != 0)) return std::nullopt;
        return std::pair<unsigned, unsigned>{2 * n + 2 - d0, a};
    });
    lines.push_back([&](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 0) return std::nullopt;
        auto [d1, d0] = odd_decomp(a, b);
        if (!(d1 == 2 && d0 == 0)) return std::nullopt;
        return std::pair<unsigned, unsigned>{1, a};
    });
    lines.push_back([&](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 0) return std::nullopt;
        auto [d1, d0] = odd_decomp(a, b);
        if (!(d1 == 2 && d0 != 0)) return std::nullopt;
        return std::pair<unsigned, unsigned>{d0, a};
    });
    // even a+b: 2a-1 = b + d1(2n+1) + d0 when 2a-1 >= b
    lines.push_back([&](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 1 || 2 * a - 1 >= b) return std::nullopt;
        return std::pair<unsigned, unsigned>{b - 2 * a + 1, a};
    });
    lines.push_back([&, m](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 1 || 2 * a - 1 < b) return std::nullopt;
        unsigned d1 = (2 * a - 1 - b) / m;
        if (d1 != 0) return std::nullopt;
        return std::pair<unsigned, unsigned>{2 * a - b, a};
    });
    lines.push_back([&, m](unsigned a, unsigned b) -> std::optional<std::pair<unsigned, unsigned>> {
        if ((a + b) % 2 == 1 || 2 * a - 1 < b) return std::nullopt;
        unsigned d1 = (2 * a - 1 - b) / m, d0 = (2 * a - 1 - b) % m;
        if (d1 != 1) return std::nullopt;
        return std::pair<unsigned, unsigned>{m - d0, a};
    });

    SetFamily fam;
    fam.solution = solution_from_rule(
        m, [&](unsigned a, unsigned b) { return apply_set_lines(lines, a, b, "L family"); });
    fam.f.resize(m);
    for (unsigned a = 1; a <= m; ++a)
        fam.f[a - 1] = static_cast<std::uint16_t>(((a % 2 == 1) ? a : 2 * n + 2 - a) - 1);
    return fam;
}

SetFamily i_family(unsigned n) {
    if (n < 2) throw std::invalid_argument("I family: n must be >= 2");
    const unsigned m = 2 * n;

    auto rule = [n, m](unsigned a, unsigned b) -> std::pair<unsigned, unsigned> {
        const bool al = a <= n, bl = b <= n;
        const long A = a, B = b, N = n;
        std::vector<SetLine> lines;
        auto push = [&](bool cond, long first) {
            lines.push_back([cond, first, a](unsigned, unsigned)
                                -> std::optional<std::pair<unsigned, unsigned>> {
                if (!cond) return std::nullopt;
                return std::pair<unsigned, unsigned>{static_cast<unsigned>(first), a};
            });
        };
        if ((a + b) % 2 == 0 && al && bl) {
            push(B == 2 * A, 1);
            push(B > 2 * A, B - 2 * A + 1);
            push(0 < 2 * A - B && 2 * A - B <= N, 2 * A - B);
            push(1 + N <= 2 * A - B, 2 * N + 1 - 2 * A + B);
        } else if ((a + b) % 2 == 1 && al && bl) {
            push(2 * A + B - 1 <= N, 2 * A + B - 1);
            push(N <= 2 * A + B - 2 && 2 * A + B - 2 <= 2 * N - 1, 2 * N + 2 - 2 * A - B);
            push(2 * N <= 2 * A + B - 2, 2 * A + B - 2 * N - 1);
        } else if ((a + b) % 2 == 1 && !al && !bl) {
            push(3 * N + 3 <= 2 * A + B && 2 * A + B <= 4 * N + 1, 2 * A + B - 2 * N - 1);
            push(4 * N + 2 <= 2 * A + B && 2 * A + B <= 5 * N + 1, 6 * N + 2 - 2 * A - B);
            push(5 * N + 2 <= 2 * A + B, 2 * A + B - 4 * N - 1);
        } else if ((a + b) % 2 == 0 && !al && !bl) {
            push(2 * A - B == N, N + 1);
            push(N < 2 * A - B && 2 * A - B <= 2 * N, 2 * A - B);
            push(2 * N + 1 <= 2 * A - B && 2 * A - B <= 3 * N - 1, 4 * N + 1 - 2 * A + B);
            push(0 < 2 * A - B && 2 * A - B < N, 2 * N + 1 + B - 2 * A);
        } else if ((a + b) % 2 == 0 && !al && bl) {
            push(2 * N + 3 <= 2 * A + B && 2 * A + B <= 3 * N + 1, 2 * A + B - 2 * N - 1);
            push(3 * N + 2 <= 2 * A + B && 2 * A + B <= 4 * N + 1, 4 * N + 2 - 2 * A - B);
            push(4 * N + 2 <= 2 * A + B && 2 * A + B <= 5 * N, 2 * A + B - 4 * N - 1);
        } else if ((a + b) % 2 == 1 && !al && bl) {
            push(2 * A - B == 2 * N, 1);
            push(2 * N < 2 * A - B && 2 * A - B <= 3 * N, 2 * A - B - 2 * N);
            push(3 * N + 1 <= 2 * A - B && 2 * A - B < 4 * N, 4 * N + 1 - 2 * A + B);
            push(N + 1 <= 2 * A - B && 2 * A - B < 2 * N, B - 2 * A + 2 * N + 1);
        } else if ((a + b) % 2 == 1 && al && !bl) {
            push(2 * A - B == -N, N + 1);
            push(-N < 2 * A - B && 2 * A - B <= 0, 2 * N + 2 * A - B);
            push(1 <= 2 * A - B, 2 * N + 1 - 2 * A + B);
            push(2 * A - B < -N, 1 + B - 2 * A);
        } else {  // even a+b, a <= n < b
            push(2 * A + B <= 2 * N + 1, 2 * A + B - 1);
            push(2 * N + 2 <= 2 * A + B && 2 * A + B <= 3 * N + 1, 4 * N + 2 - 2 * A - B);
            push(2 * A + B >= 3 * N + 2, 2 * A + B - 2 * N - 1);
        }
        return apply_set_lines(lines, a, b, "I family");
    };

    SetFamily fam;
    fam.solution = solution_from_rule(m, rule);
    fam.f.resize(m);
    for (unsigned a = 1; a <= m; ++a) {
        unsigned img = a;
        if ((a % 2 == 0 && 1 < a && a <= n) || (a % 2 == 1 && n < a && a < 2 * n))
            img = 2 * n + 1 - a;
        fam.f[a - 1] = static_cast<std::uint16_t>(img - 1);
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Verdict engine
// ---------------------------------------------------------------------------

FamilyVerdict classify(const FamilyDescriptor& d) {
    if (d.family == "Vabe") {
        if (!std::holds_alternative<VAbeParams>(d.params))
            throw std::invalid_argument("Vabe descriptor needs a, b, e parameters");
        return v_abe_verdict(std::get<VAbeParams>(d.params));
    }
    if (d.family == "K") {
        if (!std::holds_alternative<KParams>(d.params))
            throw std::invalid_argument("K descriptor needs K-family parameters");
        return k_verdict(std::get<KParams>(d.params));
    }
    if (d.family == "N") {
        if (!std::holds_alternative<NParams>(d.params))
            throw std::invalid_argument("N descriptor needs N-family parameters");
        std::get<NParams>(d.params).validate();
        return {FamilyVerdict::Kind::open, 0, "",
                "dihedral rack D_{2n+1}: dimensions are an open problem"};
    }
    if (d.family == "L") {
        if (!std::holds_alternative<unsigned>(d.params))
            throw std::invalid_argument("L descriptor needs n");
        if (std::get<unsigned>(d.params) < 1) throw std::invalid_argument("L family: n >= 1");
        return {FamilyVerdict::Kind::open, 0, "",
                "dihedral rack D_{2n+1}: dimensions are an open problem"};
    }
    if (d.family == "I") {
        if (!std::holds_alternative<unsigned>(d.params))
            throw std::invalid_argument("I descriptor needs n");
        unsigned n = std::get<unsigned>(d.params);
        if (n < 2) throw std::invalid_argument("I family: n >= 2");
        if (n > 2) return {FamilyVerdict::Kind::infinite, 0, "", "D_{2n} rack, n>2"};
        return {FamilyVerdict::Kind::open, 0, "",
                "D_4 rack type; braiding coefficients out of scope"};
    }
    throw std::invalid_argument("unknown family tag: " + d.family);
}

}  // namespace nichols
