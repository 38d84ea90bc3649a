#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "weylab/expsum.hpp"
#include "weylab/primetools.hpp"
#include "weylab/reference.hpp"

using namespace weylab;

namespace {

bool close(cd a, cd b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("the unit-circle exponential hits the quarter points") {
    CHECK(close(e_of(0.0), cd(1, 0), 1e-15));
    CHECK(close(e_of(0.5), cd(-1, 0), 1e-15));
    CHECK(close(e_of(0.25), cd(0, 1), 1e-15));
    for (double t : {0.1, 0.37, 0.77, 0.999})
        CHECK(std::abs(std::abs(e_of(t)) - 1.0) <= 1e-15);
}

TEST_CASE("phase construction normalizes the residue and validates inputs") {
    Phase p(3, 6, 0.0);  // gcd reduction
    CHECK(p.a == 1);
    CHECK(p.q == 2);
    Phase z(0, 5, 0.25);  // zero residue: canonical form a = q = 1
    CHECK(z.a == 1);
    CHECK(z.q == 1);
    CHECK(z.real_value() == doctest::Approx(1.25));
    Phase w(7, 5, 0.0);  // a reduced mod q
    CHECK(w.a == 2);
    CHECK(w.q == 5);
    CHECK_THROWS_AS(Phase(1, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(Phase(1, -3, 0.0), std::domain_error);
    CHECK_THROWS_AS(Phase(1, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(Phase(1, (i64(1) << 31) + 1, 0.0), std::range_error);
}

TEST_CASE("rationalizing a real phase picks the best small denominator") {
    Phase h = Phase::from_real(0.5, 10);
    CHECK(h.a == 1);
    CHECK(h.q == 2);
    CHECK(h.theta == doctest::Approx(0.0).epsilon(1e-15));

    Phase p = Phase::from_real(0.415, 10);
    CHECK(p.a == 2);
    CHECK(p.q == 5);
    CHECK(std::fabs(p.theta) <= 1.0 / (5.0 * 11.0));

    Phase t = Phase::from_real(1.0 / 3.0 + 1e-9, 100);
    CHECK(t.a == 1);
    CHECK(t.q == 3);

    Phase zero = Phase::from_real(0.0, 1000);
    CHECK(zero.a == zero.q);  // zero residue convention
    CHECK(zero.theta == doctest::Approx(0.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (i64 Q : {10, 100, 1000})
        for (int it = 0; it < 60; ++it) {
            double alpha = U(rng);
            Phase f = Phase::from_real(alpha, Q);
            CHECK(f.q <= Q);
            CHECK(std::fabs(f.theta) <= 1.0 / (double(f.q) * double(Q + 1)) + 1e-15);
            double d = std::fabs(alpha - f.real_value());
            d = std::min({d, std::fabs(d - 1.0), std::fabs(d + 1.0)});
            CHECK(d <= 1e-12);
        }
}

TEST_CASE("complete rational sums match the classical closed forms") {
    IntPolynomial sq({1, 0});
    CHECK(close(complete_sum(sq, 1, 4), cd(2, 2), 1e-13));
    CHECK(close(complete_sum(sq, 1, 3), cd(0, std::sqrt(3.0)), 1e-13));
    CHECK(close(complete_sum(sq, 1, 1), cd(1, 0), 1e-15));
    CHECK(close(complete_sum(IntPolynomial({2, 0, 1}), 5, 1), cd(1, 0), 1e-15));
}

TEST_CASE("quadratic complete sums have magnitude sqrt(q) at odd primes") {
    PrimeTable T = PrimeTable::build(200);
    IntPolynomial sq({1, 0});
    T.for_each_prime(3, 200, [&](i64 q) {
        for (i64 a : {i64(1), i64(2), q - 1})
            CHECK(std::fabs(std::abs(complete_sum(sq, a, q)) - std::sqrt(double(q))) <= 1e-9);
    });
}

TEST_CASE("cubic complete sums stay inside twice sqrt(q)") {
    PrimeTable T = PrimeTable::build(200);
    IntPolynomial cube({1, 0, 0});
    T.for_each_prime(5, 200, [&](i64 q) {
        for (i64 a : {i64(1), i64(2)}) {
            if ((3 * a) % q == 0) continue;
            CHECK(std::abs(complete_sum(cube, a, q)) <= 2.0 * std::sqrt(double(q)) + 1e-9);
        }
    });
}

TEST_CASE("restricted complete sums keep only coprime shifted residues") {
    IntPolynomial sq({1, 0});
    CHECK(close(restricted_complete_sum(sq, 1, 4, 1, 1), cd(2, 0), 1e-13));
    CHECK(close(restricted_complete_sum(sq, 1, 1, 1, 1), cd(1, 0), 1e-15));
    CHECK(close(restricted_complete_sum(sq, 1, 2, 1, 2), cd(0, 0), 1e-13));
    // brute cross-check on a composite modulus
    for (i64 q : {6, 12, 15}) {
        cd brute(0, 0);
        for (i64 r = 1; r <= q; ++r)
            if (gcd_i64(2 * r + 1, q) == 1) brute += e_of(double((r * r) % q) / double(q));
        CHECK(close(restricted_complete_sum(sq, 1, q, 1, 2), brute, 1e-12));
    }
}

TEST_CASE("weighted polynomial-phase sums match hand values") {
    IntPolynomial lin({1}), sq({1, 0});
    CHECK(close(weyl_sum(lin, Phase(1, 2), 4, Weight::unit()), cd(0, 0), 1e-13));
    CHECK(close(weyl_sum(sq, Phase(1, 4), 4, Weight::unit()), cd(2, 2), 1e-13));
    PrimeTable T = PrimeTable::build(100);
    cd s = weyl_sum(sq, Phase(1, 1), 10, Weight::prime(1, 1), &T);
    double logs = std::log(2.) + std::log(3.) + std::log(5.) + std::log(7.) + std::log(11.);
    CHECK(close(s, cd(logs, 0), 1e-12));
    CHECK_THROWS_AS(weyl_sum(sq, Phase(1, 1), 10, Weight::prime(1, 1), nullptr), std::domain_error);
    CHECK_THROWS_AS(weyl_sum(sq, Phase(1, 1), 99, Weight::prime(1, 2), &T), std::range_error);
}

TEST_CASE("rational-only phases reduce to exact residue classes") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> qs(1, 97), coeff(0, 5);
    for (int it = 0; it < 25; ++it) {
        i64 q = qs(rng);
        std::uniform_int_distribution<i64> as(1, q);
        i64 a = as(rng);
        std::vector<i64> c{1 + coeff(rng) % 3, coeff(rng), coeff(rng)};
        IntPolynomial psi(c);
        const i64 N = 5000;
        // independent route: histogram of a psi(x) mod q over residues of x
        std::vector<i64> cnt(size_t(q), 0);
        for (i64 x = 1; x <= N; ++x) {
            i128 v = (psi.eval(x) % q + q) % q;
            cnt[size_t((i64(v) * (a % q)) % q)] += 1;
        }
        cd expect(0, 0);
        for (i64 r = 0; r < q; ++r)
            expect += double(cnt[size_t(r)]) * e_of(double(r) / double(q));
        CHECK(close(weyl_sum(psi, Phase(a, q), N, Weight::unit()), expect, N * 1e-12));
    }
}

TEST_CASE("parallel split-phase sums agree with the serial long-double reference") {
    PrimeTable T = PrimeTable::build(20000);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> th(-1e-7, 1e-7);
    std::uniform_int_distribution<i64> qs(1, 1000);
    for (int it = 0; it < 12; ++it) {
        i64 q = qs(rng);
        std::uniform_int_distribution<i64> as(1, q);
        Phase alpha(as(rng), q, th(rng));
        IntPolynomial psi = it % 2 ? IntPolynomial({1, 0}) : IntPolynomial({2, 0, 1});
        Weight w = it % 3 == 0   ? Weight::unit()
                   : it % 3 == 1 ? Weight::poly(GenPolynomial({1, 1}))
                                 : Weight::prime(1, 1);
        const i64 N = 3000;
        cd fast = weyl_sum(psi, alpha, N, w, &T);
        cd slow = reference::weyl_sum_serial(psi, alpha, N, w, &T);
        double mass = 0.0;
        for (double v : weight_values(psi, w, N, &T)) mass += std::fabs(v);
        CHECK(close(fast, slow, 1e-8 * (1.0 + mass)));
    }
}

TEST_CASE("conjugating the phase conjugates the sum") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<i64> qs(2, 50);
    std::uniform_real_distribution<double> th(-0.001, 0.001);
    for (int it = 0; it < 20; ++it) {
        i64 q = qs(rng);
        std::uniform_int_distribution<i64> as(1, q - 1);
        i64 a = as(rng);
        double theta = th(rng);
        IntPolynomial psi({1, 0, 2});
        Weight w = it % 2 ? Weight::unit() : Weight::poly(GenPolynomial({2, 0, 1}));
        cd s = weyl_sum(psi, Phase(a, q, theta), 500, w);
        cd m = weyl_sum(psi, Phase(q - a, q, -theta), 500, w);
        double mass = 0.0;
        for (double v : weight_values(psi, w, 500)) mass += std::fabs(v);
        CHECK(close(m, std::conj(s), 1e-12 * (1.0 + mass)));
    }
}

TEST_CASE("running partial periods stay within twice the denominator of the full average") {
    std::vector<IntPolynomial> polys{IntPolynomial({1, 0}), IntPolynomial({1, 0, 0}),
                                     IntPolynomial({1, 0, 1})};
    for (const IntPolynomial& psi : polys)
        for (i64 q = 1; q <= 20; ++q) {
            for (i64 a = 1; a <= q; ++a) {
                if (gcd_i64(a, q) != 1) continue;
                std::vector<cd> period(static_cast<size_t>(q));
                for (i64 r = 0; r < q; ++r) {
                    i64 v = i64(((psi.eval(r) % q + q) % q) * (a % q) % q);
                    period[size_t(r)] = e_of(double(v) / double(q));
                }
                cd Ga = complete_sum(psi, a, q);
                cd run(0, 0);
                for (i64 y = 1; y <= 2000; ++y) {
                    run += period[size_t(y % q)];
                    CHECK(std::abs(run - double(y) / double(q) * Ga) <= 2.0 * double(q) + 1e-9);
                }
            }
        }
}

TEST_CASE("main-term approximations collapse correctly at the trivial phase") {
    IntPolynomial sq({1, 0});
    CHECK(close(major_arc_approx(sq, Phase(1, 1), 100, Weight::unit()), cd(100, 0), 1e-10));
    cd tele = major_arc_approx(sq, Phase(1, 1), 100, Weight::delta_prime(1, 1), true);
    CHECK(close(tele, cd(10000, 0), 1e-8));
    cd thirds = major_arc_approx(sq, Phase(1, 3), 999, Weight::unit());
    CHECK(close(thirds, 999.0 / 3.0 * complete_sum(sq, 1, 3), 1e-9));
    CHECK(std::abs(thirds - cd(0, 999.0 / 3.0 * std::sqrt(3.0))) <= 1e-9);
}

TEST_CASE("main-term approximation assembles prefactor, complete sum, and offset sum") {
    IntPolynomial psi({1, 0, 1});
    double theta = 3e-8;
    Phase alpha(2, 7, theta);
    const i64 N = 400;
    cd inner(0, 0);
    for (i64 x = 1; x <= N; ++x) inner += e_of(theta * double(psi.eval(x)));
    cd expect = complete_sum(psi, 2, 7) / 7.0 * inner;
    CHECK(close(major_arc_approx(psi, alpha, N, Weight::unit()), expect, 1e-8));
}

TEST_CASE("telescoped offset sums track the direct weighted sum for tiny offsets") {
    IntPolynomial sq({1, 0});
    GenPolynomial d = delta(sq);
    for (double theta : {1e-8, 1e-7}) {
        const i64 N = 100;
        cd direct(0, 0);
        for (i64 x = 1; x <= N; ++x)
            direct += double(d.eval(x - 1)) * e_of(theta * double(sq.eval(x)));
        cd tele(0, 0);
        for (i64 m = 1; m <= sq.eval(N); ++m) tele += e_of(theta * double(m));
        double budget = theta * double(sq.eval(N)) * double(d.eval(N));
        CHECK(std::abs(direct - tele) <= 40.0 * budget);
    }
}

TEST_CASE("bound formulas evaluate the reference expressions") {
    IntPolynomial sq({1, 0});
    {
        const double V = 2, q = 1, a1 = 1, k = 2, K = 2;
        double bracket = 1 / q + 1 / V + q / (a1 * std::pow(V, k));
        double expect = V * (std::pow(V, -1 / K) + std::pow(a1, 1 / (2 * K)) *
                                                       std::pow(std::log(a1 * q * V), (k - 1) * (k - 1) / (2 * K)) *
                                                       std::pow(bracket, 1 / (2 * K)));
        WeylBoundValue b = weyl_bound(sq, 1, 1, 2);
        CHECK(b.envelope == doctest::Approx(expect).epsilon(1e-12));
        CHECK(b.envelope == doctest::Approx(3.5131).epsilon(1e-3));
    }
    {
        const double V = 1e4, q = 1e4;
        double bracket = 1 / q + 1 / V + q / (V * V);
        double expect = V * (std::pow(V, -0.5) + std::pow(std::log(q * V), 0.25) * std::pow(bracket, 0.25));
        WeylBoundValue b = weyl_bound(sq, 1, 10000, 10000);
        CHECK(b.envelope == doctest::Approx(expect).epsilon(1e-12));
        CHECK(b.envelope == doctest::Approx(2827.9).epsilon(1e-3));
    }
    CHECK(weyl_bound(sq, 1, 100, 1000).envelope < weyl_bound(sq, 1, 10, 1000).envelope);
    {
        const double V = 500, q = 9, a1 = 2, k = 3, eps = 0.05;
        double expect = std::pow(V, 1 + eps) * std::pow(a1 / q + a1 / V + q / std::pow(V, k),
                                                        std::pow(2.0, 1 - k));
        CHECK(weyl_bound(IntPolynomial({2, 0, 0}), 1, 9, 500).coarse ==
              doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("weight tables resolve every supported weight kind") {
    PrimeTable T = PrimeTable::build(100);
    IntPolynomial sq({1, 0});
    std::vector<double> unit = weight_values(sq, Weight::unit(), 5);
    CHECK(unit == std::vector<double>{0, 1, 1, 1, 1, 1});
    std::vector<double> poly = weight_values(sq, Weight::poly(GenPolynomial({2, 1})), 3);
    CHECK(poly == std::vector<double>{0, 3, 5, 7});
    std::vector<double> pw = weight_values(sq, Weight::prime(1, 2), 5, &T);
    for (i64 x = 1; x <= 5; ++x)
        CHECK(pw[size_t(x)] == doctest::Approx(lambda_weight(T, 1, 2, x)));
    std::vector<double> dp = weight_values(sq, Weight::delta_prime(1, 1), 5, &T);
    GenPolynomial d = delta(sq);
    for (i64 x = 1; x <= 5; ++x)
        CHECK(dp[size_t(x)] == doctest::Approx(double(d.eval(x - 1)) * lambda_weight(T, 1, 1, x)));
}
