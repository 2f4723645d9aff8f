#include <doctest.h>

#include "nichols/families.hpp"
#include "nichols/symmetrizer.hpp"
#include "test_support.hpp"

using namespace nichols;
using nichols::testing::Rng;

namespace {

VAbeParams vabe3(long ta, long tb, long te) {
    const CycloField& f = CycloField::get(3);
    return {CycloNum::root_power(f, ta), CycloNum::root_power(f, tb),
            CycloNum::root_power(f, te)};
}

std::vector<KParams> k_param_pool(unsigned n, unsigned maxN) {
    std::vector<KParams> out;
    for (unsigned N = 1; N <= maxN; ++N)
        for (int j : {1, 2, 3, 4})
            for (unsigned k = 0; k < N; ++k)
                for (int p : {0, 1})
                    for (unsigned s = 1; s <= N; ++s)
                        for (int mu : {1, -1})
                            out.push_back(KParams{N, n, j, k, p, s, mu, (j % 2 == 0) ? 1 : -1});
    return out;
}

std::vector<NParams> n_param_pool(unsigned n, unsigned maxN) {
    std::vector<NParams> out;
    for (unsigned N = 1; N <= maxN; ++N)
        for (unsigned k = 0; k < N; ++k)
            for (int p : {0, 1})
                for (int q : {0, 1})
                    for (unsigned s = 1; s <= N; ++s)
                        for (int mu : {1, -1})
                            for (int lam : {1, -1})
                                out.push_back(NParams{N, n, k, p, q, s, mu, lam});
    return out;
}

template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, Rng& rng) {
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);
    if (pool.size() > count) pool.resize(count);
    return pool;
}

}  // namespace

TEST_CASE("V_abe braiding entries") {
    auto c = v_abe(vabe3(1, 2, 0));
    const CycloField& f = CycloField::get(3);
    // c(v1 (x) v1) = a v2 (x) v2
    CHECK(c.sigma(0, 0) == 1);
    CHECK(c.tau(0, 0) == 1);
    CHECK(c.coeff(0, 0) == CycloNum::root_power(f, 1));
    // c(v1 (x) v2) = b v1 (x) v2
    CHECK(c.sigma(0, 1) == 0);
    CHECK(c.tau(0, 1) == 1);
    CHECK(c.coeff(0, 1) == CycloNum::root_power(f, 2));
    // (1,1,1): c(v2 (x) v2) = v1 (x) v1
    auto u = v_abe(vabe3(0, 0, 0));
    CHECK(u.sigma(1, 1) == 0);
    CHECK(u.tau(1, 1) == 0);
    CHECK(u.coeff(1, 1).is_one());

    CHECK_THROWS_AS(v_abe(VAbeParams{CycloNum::zero(f), CycloNum::one(f), CycloNum::one(f)}),
                    std::invalid_argument);
}

TEST_CASE("V_abe braid equation for random root parameters") {
    Rng rng(33);
    const CycloField& f = CycloField::get(12);
    for (int iter = 0; iter < 12; ++iter) {
        VAbeParams p{testing::random_root(f, rng), testing::random_root(f, rng),
                     testing::random_root(f, rng)};
        auto c = v_abe(p);
        CHECK(check_braid_equation(c));
        CHECK(cocycle_check(c));
    }
}

TEST_CASE("V_abe diagonalization") {
    // (1, zeta_3, 1): profile (zeta_3, 1, zeta_3), Cartan A1 x A1
    auto d1 = v_abe_diagonalize(vabe3(0, 1, 0));
    auto prof1 = diagonal_profile(d1.diagonal);
    REQUIRE(prof1.has_value());
    const CycloField& b1 = d1.diagonal.field();
    CHECK(b1.order() == 24);
    CHECK(prof1->at(0, 0) == prof1->at(1, 1));
    CHECK(prof1->at(0, 1) * prof1->at(1, 0) == CycloNum::one(b1));
    CHECK(d1.sqrt_ae * d1.sqrt_ae == CycloNum::one(b1));

    // (zeta_3^2, zeta_3, 1): q12 q21 = ae = zeta_3^2 = q^{-1}, Cartan A2
    auto d2 = v_abe_diagonalize(vabe3(2, 1, 0));
    auto prof2 = diagonal_profile(d2.diagonal);
    REQUIRE(prof2.has_value());
    const CycloField& b2 = d2.diagonal.field();
    CycloNum q = prof2->at(0, 0);
    CHECK(q == CycloNum::root_power(b2, 8));  // zeta_3 inside Q(zeta_24)
    CHECK(prof2->at(0, 1) * prof2->at(1, 0) == q.pow(-1));
    CHECK(d2.sqrt_ae * d2.sqrt_ae == CycloNum::root_power(b2, 16));

    // (1, -1, 1): profile (-1, 1, -1)
    const CycloField& f3 = CycloField::get(3);
    auto d3 = v_abe_diagonalize(VAbeParams{CycloNum::one(f3), -CycloNum::one(f3),
                                           CycloNum::one(f3)});
    auto prof3 = diagonal_profile(d3.diagonal);
    REQUIRE(prof3.has_value());
    const CycloField& b3 = d3.diagonal.field();
    CHECK(prof3->at(0, 0) == -CycloNum::one(b3));
    CHECK(prof3->at(1, 1) == -CycloNum::one(b3));
    CHECK(prof3->at(0, 1) * prof3->at(1, 0) == CycloNum::one(b3));

    // graded dims agree between the raw, symmetric and diagonal forms
    auto raw = graded_dims(v_abe(vabe3(0, 1, 0)), 4, ScanBudget::unlimited()).dims;
    auto iso = graded_dims(d1.iso_form, 4, ScanBudget::unlimited()).dims;
    auto dia = graded_dims(d1.diagonal, 4, ScanBudget::unlimited()).dims;
    CHECK(raw == iso);
    CHECK(raw == dia);

    // parameters that are not signed root powers are rejected with advice
    // (note 1 + zeta_3 = -zeta_3^2 IS one; the rational 2 is not)
    CycloNum bad = CycloNum::from_rational(f3, 2);
    CHECK_THROWS_AS(v_abe_diagonalize(VAbeParams{bad, CycloNum::one(f3), CycloNum::one(f3)}),
                    std::invalid_argument);
}

TEST_CASE("V_abe verdicts") {
    const CycloField& f5 = CycloField::get(5);
    const CycloField& f7 = CycloField::get(7);
    // b = -1, ae = zeta_5 -> 4m = 20
    {
        VAbeParams p{CycloNum::root_power(f5, 1), -CycloNum::one(f5), CycloNum::one(f5)};
        auto v = v_abe_verdict(p);
        CHECK(v.kind == FamilyVerdict::Kind::finite);
        CHECK(v.total == 20);
        CHECK(v.type_name == "super A2(q;I2)");
    }
    // ae = 1, b = zeta_7 -> m^2 = 49
    {
        VAbeParams p{CycloNum::one(f7), CycloNum::root_power(f7, 1), CycloNum::one(f7)};
        auto v = v_abe_verdict(p);
        CHECK(v.kind == FamilyVerdict::Kind::finite);
        CHECK(v.total == 49);
        CHECK(v.type_name == "Cartan A1xA1");
    }
    // b = zeta_5, ae = zeta_5^3: no branch matches
    {
        VAbeParams p{CycloNum::root_power(f5, 3), CycloNum::root_power(f5, 1),
                     CycloNum::one(f5)};
        CHECK(v_abe_verdict(p).kind == FamilyVerdict::Kind::infinite);
    }
    // the 27 branch
    CHECK(v_abe_verdict(vabe3(2, 1, 0)).total == 27);
    CHECK(v_abe_verdict(vabe3(2, 1, 0)).type_name == "Cartan A2");
}

TEST_CASE("K braiding: explicit values and validation") {
    // a = 1 row: c(w1 (x) w_b) = (-1)^p (mu K)^s w_b (x) w_1
    KParams p{1, 2, 2, 0, 1, 1, 1, 1};
    auto c = k_braiding(p);
    const CycloField& f = c.field();
    CHECK(f.order() == 16);
    for (unsigned b = 0; b < 4; ++b) {
        CHECK(c.sigma(0, b) == b);
        CHECK(c.tau(0, b) == 0);
        CHECK(c.coeff(0, b) == -CycloNum::one(f));  // q = -1 here
    }
    // q = (-1)^p (K mu)^s = -1 for these parameters
    CHECK(c.coeff(0, 0) == -CycloNum::one(f));

    CHECK_THROWS_AS(k_braiding(KParams{1, 2, 1, 0, 0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(k_braiding(KParams{1, 2, 2, 1, 0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(k_braiding(KParams{1, 2, 2, 0, 0, 2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(k_braiding(KParams{1, 2, 2, 0, 2, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("K twists") {
    // n=1: x_2 = (J^-1 K mu)^0 = 1, and both twist maps reduce to the identity
    KParams p1{1, 1, 2, 0, 0, 1, 1, 1};
    auto t1 = k_twist(p1);
    const CycloField& f1 = CycloField::get(p1.field_order());
    CHECK(t1.phi1 == MonomialOperator::identity(f1, 2));
    CHECK(t1.phi2 == MonomialOperator::identity(f1, 2));

    // phi2 fixes all odd indices (0-based even)
    KParams p2{2, 3, 3, 1, 1, 2, -1, -1};
    auto t2 = k_twist(p2);
    for (unsigned b = 1; b <= 6; b += 2) CHECK(t2.phi2.image[b - 1] == b - 1);
    for (unsigned b = 2; b <= 6; b += 2) CHECK(t2.phi2.image[b - 1] == (2 * 3 + 2 - b) - 1);
}

TEST_CASE("K family: twist equality and closed-form tables, n = 1..4") {
    Rng rng(101);
    for (unsigned n = 1; n <= 4; ++n) {
        auto picks = sample(k_param_pool(n, 2), 6, rng);
        REQUIRE(picks.size() >= 5);
        for (const auto& p : picks) {
            auto c = k_braiding(p);
            CHECK(check_braid_equation(c));
            CHECK(cocycle_check(c));
            auto conj = twist_conjugate(c, k_twist(p));
            CHECK(conj.equal);
            CHECK(k_closed_form(p, TwistVariant::bar) == conj.bar);
            CHECK(k_closed_form(p, TwistVariant::tilde) == conj.tilde);
        }
    }
}

TEST_CASE("K n=2 conjugated braiding matches the explicit dihedral table") {
    // the bar braiding on D_4: coefficients in terms of q, K, J, mu, lambda
    Rng rng(55);
    auto picks = sample(k_param_pool(2, 2), 8, rng);
    for (const auto& p : picks) {
        auto bar = k_closed_form(p, TwistVariant::bar);
        const CycloField& f = bar.field();
        auto W = [&](long e) { return CycloNum::root_power(f, e); };
        CycloNum K = W(8l * p.n * p.k), J = W(2l * p.j * p.N);
        CycloNum mu = CycloNum::from_rational(f, p.mu);
        CycloNum lam = CycloNum::from_rational(f, p.lambda);
        CycloNum q = CycloNum::from_rational(f, p.p == 0 ? 1 : -1) * (K * mu).pow(p.s);
        // row a: sigma_a(b) = 2a - b mod 4 (in 1..4), tau = a
        std::vector<std::vector<CycloNum>> coef(5, std::vector<CycloNum>(5, q));
        coef[1][2] = K * mu * q / J;
        coef[1][3] = lam * q;
        coef[1][4] = J * q / (K * mu);
        coef[2][1] = lam * q / (J.pow(5) * K * mu);
        coef[2][3] = K * lam * mu * q / J.pow(3);
        coef[2][4] = J.pow(4) * lam * q;
        coef[3][1] = lam * q;
        coef[3][2] = K * lam * mu * q / J.pow(5);
        coef[3][4] = lam * q / (J.pow(3) * K * mu);
        coef[4][1] = q / (J.pow(5) * K * mu);
        coef[4][2] = lam * q / J.pow(4);
        coef[4][3] = K * mu * q / J.pow(3);
        for (unsigned a = 1; a <= 4; ++a)
            for (unsigned b = 1; b <= 4; ++b) {
                unsigned target = static_cast<unsigned>(((2 * a - b - 1) % 4 + 4) % 4 + 1);
                CHECK(bar.sigma(a - 1, b - 1) == target - 1);
                CHECK(bar.tau(a - 1, b - 1) == a - 1);
                CHECK(bar.coeff(a - 1, b - 1) == coef[a][b]);
            }
        // diagonal blocks {w1,w3} and {w2,w4}: Dynkin (q, q^2, q)
        CHECK(bar.coeff(0, 2) * bar.coeff(2, 0) == q * q);
        CHECK(bar.coeff(1, 3) * bar.coeff(3, 1) == q * q);
    }
}

TEST_CASE("K closed-form spot values") {
    // (N,n,j,k,p,s,mu,lambda) = (1,2,2,0,1,1,1,1): K = 1, J = zeta_4, q = -1,
    // x = [1, -i, 1, i] (as computed from the x-sequence)
    KParams p{1, 2, 2, 0, 1, 1, 1, 1};
    const CycloField& f = CycloField::get(16);
    auto W = [&](long e) { return CycloNum::root_power(f, e); };
    CycloNum q = -CycloNum::one(f);

    auto tilde = k_closed_form(p, TwistVariant::tilde);
    // tilde at a = b = 1: (-1)^p (mu K)^s w_1 (x) w_1
    CHECK(tilde.sigma(0, 0) == 0);
    CHECK(tilde.tau(0, 0) == 0);
    CHECK(tilde.coeff(0, 0) == q);

    auto bar = k_closed_form(p, TwistVariant::bar);
    // bar at a = 1, b even: x_b x_1^{-1} (-1)^p (mu K)^s w_{2n+2-b} (x) w_1
    // with x_2 = J^{-1} = zeta_16^{-4}
    CHECK(bar.sigma(0, 1) == 3);  // b = 2 -> w_4
    CHECK(bar.tau(0, 1) == 0);
    CHECK(bar.coeff(0, 1) == W(-4) * q);
    // and b = 4: x_4 = J = zeta_16^4
    CHECK(bar.sigma(0, 3) == 1);  // b = 4 -> w_2
    CHECK(bar.coeff(0, 3) == W(4) * q);
}

TEST_CASE("K verdicts") {
    // n=2, q=-1, lambda=1 -> 64, Cartan A2xA2
    auto v = k_verdict(KParams{1, 2, 2, 0, 1, 1, 1, 1});
    CHECK(v.kind == FamilyVerdict::Kind::finite);
    CHECK(v.total == 64);
    CHECK(v.type_name == "Cartan A2xA2");
    // n=3: infinite for any parameters
    CHECK(k_verdict(KParams{1, 3, 2, 0, 1, 1, 1, 1}).kind == FamilyVerdict::Kind::infinite);
    CHECK(k_verdict(KParams{2, 5, 1, 1, 0, 2, -1, -1}).kind == FamilyVerdict::Kind::infinite);
    // n=1, lambda=1, q=-1: lambda q^2 = 1 != q -> finite A1xA1, total 4
    auto v1 = k_verdict(KParams{1, 1, 2, 0, 1, 1, 1, 1});
    CHECK(v1.kind == FamilyVerdict::Kind::finite);
    CHECK(v1.type_name == "Cartan A1xA1");
    CHECK(v1.total == 4);
    // n=1, lambda=-1, q=-1: lambda q^3 = 1 != q -> finite A2, total 8
    auto v2 = k_verdict(KParams{1, 1, 1, 0, 1, 1, 1, -1});
    CHECK(v2.kind == FamilyVerdict::Kind::finite);
    CHECK(v2.type_name == "Cartan A2");
    CHECK(v2.total == 8);
    // n=1, q=1: infinite
    CHECK(k_verdict(KParams{1, 1, 2, 0, 0, 1, 1, 1}).kind == FamilyVerdict::Kind::infinite);
}

TEST_CASE("N braiding: explicit values and validation") {
    NParams p{1, 2, 0, 0, 1, 1, 1, 1};
    auto c = n_braiding(p);
    const CycloField& f = c.field();
    CHECK(f.order() == 40);
    const unsigned n = p.n;
    auto B = [&](long e) {
        long BE = 2l * p.k * (2 * n + 1);  // mu = 1 branch
        return CycloNum::root_power(f, BE * e);
    };
    // alpha = n+1 row: coefficient (-1)^q B^{2(n+s)}, target (beta, n+1)
    for (unsigned b = 0; b < 2 * n + 1; ++b) {
        CHECK(c.sigma(n, b) == b);
        CHECK(c.tau(n, b) == n);
        CHECK(c.coeff(n, b) == -B(2 * (n + 1)));  // q-parity sign, s = 1
    }
    CHECK_THROWS_AS(n_braiding(NParams{1, 2, 1, 0, 0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(n_braiding(NParams{1, 2, 0, 0, 0, 2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(n_braiding(NParams{1, 2, 0, 2, 0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("N twist x-sequence") {
    // x_3 = B^4 (k=1), x_2 = lambda B^{4n-2} (k=1)
    NParams p{1, 2, 0, 1, 0, 1, -1, -1};
    auto t = n_twist(p);
    const CycloField& f = CycloField::get(p.field_order());
    const long M = f.order();
    long BE = (M / 4 + 2l * p.k * (2 * p.n + 1)) % M;  // mu = -1 branch
    CHECK(t.phi1.coeff[2] == CycloNum::root_power(f, BE * 4));
    CycloNum x2 = CycloNum::root_power(f, BE * (4l * p.n - 2));
    CHECK(t.phi1.coeff[1] == (p.lambda == 1 ? x2 : -x2));
    // phi1 reflects odd (1-based) indices; phi2 reflects even ones
    for (unsigned a = 1; a <= 2 * p.n + 1; ++a) {
        unsigned r = 2 * p.n + 2 - a;
        if (a % 2 == 1) {
            CHECK(t.phi1.image[a - 1] == r - 1);
            CHECK(t.phi2.image[a - 1] == a - 1);
        } else {
            CHECK(t.phi1.image[a - 1] == a - 1);
            CHECK(t.phi2.image[a - 1] == r - 1);
        }
    }
}

TEST_CASE("N family: twist equality and closed-form tables, n = 1..3") {
    Rng rng(202);
    for (unsigned n = 1; n <= 3; ++n) {
        auto picks = sample(n_param_pool(n, 2), 6, rng);
        REQUIRE(picks.size() >= 5);
        for (const auto& p : picks) {
            auto c = n_braiding(p);
            CHECK(check_braid_equation(c));
            CHECK(cocycle_check(c));
            auto conj = twist_conjugate(c, n_twist(p));
            CHECK(conj.equal);
            CHECK(n_closed_form(p, TwistVariant::tilde) == conj.tilde);
            CHECK(n_closed_form(p, TwistVariant::bar) == conj.bar);
        }
    }
}

TEST_CASE("N closed form values at a = n+1") {
    NParams p{1, 1, 0, 1, 1, 1, -1, -1};
    auto tilde = n_closed_form(p, TwistVariant::tilde);
    auto bar = n_closed_form(p, TwistVariant::bar);
    auto conj = twist_conjugate(n_braiding(p), n_twist(p));
    CHECK(tilde == conj.tilde);
    CHECK(bar == conj.bar);

    // row a = n+1 formulas: tilde carries x_{n+1} x_{2n+2-b}^{-1}, bar
    // carries x_b x_{n+1}^{-1}, both times (-1)^q B^{2n+2s}
    {
        const CycloField& f = CycloField::get(p.field_order());  // M = 24
        long BE = (f.order() / 4) % f.order();                   // mu = -1, k = 0
        auto B = [&](long e) { return CycloNum::root_power(f, BE * e); };
        const unsigned n = p.n;
        std::vector<CycloNum> xs(2 * n + 2);
        xs[1] = CycloNum::one(f);
        xs[2] = -B(4 * (long)n - 2);  // lambda = -1
        xs[3] = B(4);
        CycloNum head = -B(2 * (long)n + 2);  // (-1)^q B^{2n+2s}, q = s = 1
        for (unsigned b = 1; b <= 2 * n + 1; ++b) {
            unsigned target = 2 * n + 2 - b;
            CHECK(tilde.coeff(n, b - 1) == xs[n + 1] / xs[target] * head);
            CHECK(bar.coeff(n, b - 1) == xs[b] / xs[n + 1] * head);
            CHECK(tilde.sigma(n, b - 1) == target - 1);
            CHECK(tilde.tau(n, b - 1) == n);
        }
    }
    // rack shape: second component a, first congruent to 2a - b mod 2n+1
    const long m = 2 * p.n + 1;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
            CHECK(tilde.tau(a, b) == a);
            long dihedral = ((2 * (a + 1) - (b + 1) - 1) % m + m) % m;
            CHECK(tilde.sigma(a, b) == dihedral);
        }
}

TEST_CASE("L family: dihedral up to the explicit bijection, n <= 6") {
    for (unsigned n = 1; n <= 6; ++n) {
        auto fam = l_family(n);
        const unsigned m = 2 * n + 1;
        auto flags = solution_checks(fam.solution);
        CHECK(flags.ybe);
        CHECK(flags.nondegenerate);
        // every r(a, b) = (. , a)
        for (unsigned y = 0; y < m; ++y)
            for (unsigned x = 0; x < m; ++x) CHECK(fam.solution.tau[y][x] == x);
        // conjugated solution = rack solution of D_{2n+1}; gamma = 2a-b mod m
        auto conj = conjugate_solution(fam.solution, fam.f);
        CHECK(conj == rack_to_solution(dihedral_rack(m)));
        CHECK(derived_rack(fam.solution).size == m);
        auto iso = rack_isomorphic(derived_rack(fam.solution), dihedral_rack(m),
                                   std::optional<std::vector<std::uint16_t>>(fam.f));
        CHECK(iso.has_value());
    }
}

TEST_CASE("I family: dihedral up to the explicit bijection, n <= 6") {
    for (unsigned n = 2; n <= 6; ++n) {
        auto fam = i_family(n);
        const unsigned m = 2 * n;
        auto flags = solution_checks(fam.solution);
        CHECK(flags.ybe);
        CHECK(flags.nondegenerate);
        auto conj = conjugate_solution(fam.solution, fam.f);
        CHECK(conj == rack_to_solution(dihedral_rack(m)));
        auto iso = rack_isomorphic(derived_rack(fam.solution), dihedral_rack(m),
                                   std::optional<std::vector<std::uint16_t>>(fam.f));
        CHECK(iso.has_value());
    }
    CHECK_THROWS_AS(i_family(1), std::invalid_argument);

    // case (8) sample: 2|(a+b), a in [1,n], b in [n+1,2n], 2a+b <= 2n+1
    //   => r(a,b) = (2a+b-1, a); at n=4 take (a,b) = (1,5)
    auto fam = i_family(4);
    const unsigned a = 1, b = 5;
    CHECK(fam.solution.sigma[a - 1][b - 1] == (2 * a + b - 1) - 1);
    CHECK(fam.solution.tau[b - 1][a - 1] == a - 1);
}

TEST_CASE("classify") {
    // K-family, n=2 finite 64
    FamilyDescriptor dk{"K", KParams{1, 2, 2, 0, 1, 1, 1, 1}};
    auto vk = classify(dk);
    CHECK(vk.kind == FamilyVerdict::Kind::finite);
    CHECK(vk.total == 64);
    // I family n=4: infinite by the D_{2n} rack rule
    FamilyDescriptor di{"I", 4u};
    auto vi = classify(di);
    CHECK(vi.kind == FamilyVerdict::Kind::infinite);
    CHECK(vi.rule == "D_{2n} rack, n>2");
    // L family: open
    FamilyDescriptor dl{"L", 3u};
    CHECK(classify(dl).kind == FamilyVerdict::Kind::open);
    // N family: open
    FamilyDescriptor dn{"N", NParams{1, 2, 0, 0, 0, 1, 1, 1}};
    CHECK(classify(dn).kind == FamilyVerdict::Kind::open);
    // I n=2: open (not covered by the n>2 rule)
    CHECK(classify(FamilyDescriptor{"I", 2u}).kind == FamilyVerdict::Kind::open);
    // unknown family
    CHECK_THROWS_AS(classify(FamilyDescriptor{"Z", 1u}), std::invalid_argument);
    // Vabe branch via descriptor
    FamilyDescriptor dv{"Vabe", vabe3(2, 1, 0)};
    CHECK(classify(dv).total == 27);
}

TEST_CASE("t-equivalence consequence: equal graded dims for c and tilde") {
    // K n=2 instance, modest cap
    KParams p{1, 2, 2, 0, 1, 1, 1, 1};
    auto c = k_braiding(p);
    auto conj = twist_conjugate(c, k_twist(p));
    REQUIRE(conj.equal);
    auto a = graded_dims(c, 3, ScanBudget::unlimited()).dims;
    auto b = graded_dims(conj.tilde, 3, ScanBudget::unlimited()).dims;
    CHECK(a == b);
}
