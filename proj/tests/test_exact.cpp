// Exact kernel tests: polynomial arithmetic, Sturm isolation, refinement,
// comparisons, and resultant-backed algebraic arithmetic. Frozen expected
// values come from independent oracles (bisection on sign changes,
// high-precision numeric evaluation) noted inline.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diorec/algebraic.hpp"
#include "diorec/resultant.hpp"
#include "diorec/unipoly.hpp"

using namespace diorec;

TEST_CASE("unipoly ring arithmetic and evaluation") {
    UniPoly p = UniPoly::of({-1, -1, -1, 1});  // X^3 - X^2 - X - 1
    CHECK(p.degree() == 3);
    CHECK(p.eval(Int(2)) == 1);
    CHECK(p.eval(Int(1)) == -2);
    CHECK(p.eval(Rat(3, 2)) == Rat(-11, 8));

    UniPoly q = UniPoly::of({2, 0, 1});  // X^2 + 2
    CHECK((p * q).eval(Int(5)) == p.eval(Int(5)) * q.eval(Int(5)));
    CHECK((p + q).eval(Int(-3)) == p.eval(Int(-3)) + q.eval(Int(-3)));
    CHECK((p - p).is_zero());
    CHECK(p.derivative() == UniPoly::of({-1, -2, 3}));
}

TEST_CASE("pseudo-division, gcd, square-free part") {
    UniPoly a = UniPoly::of({-2, 0, 1});  // X^2 - 2
    UniPoly b = UniPoly::of({1, 1});      // X + 1
    UniPoly r = UniPoly::prem(a, b);
    CHECK(r.degree() == 0);  // remainder of X^2-2 by X+1 is -1

    // gcd picks up the repeated factor of p^2 * q
    UniPoly p = UniPoly::of({1, 2, 1});   // (X+1)^2
    UniPoly q = UniPoly::of({-3, 1});     // X - 3
    UniPoly prod = p * q;
    CHECK(UniPoly::gcd(prod, prod.derivative()) == UniPoly::of({1, 1}));
    UniPoly sf = prod.square_free_part();
    CHECK(sf == UniPoly::of({1, 1}) * q);  // (X+1)(X-3)

    CHECK(UniPoly::divides(UniPoly::of({1, 1}), prod));
    CHECK_FALSE(UniPoly::divides(UniPoly::of({1, 0, 1}), prod));
    CHECK(UniPoly::divide_exact(prod, q) == p);
}

TEST_CASE("argument transforms") {
    UniPoly p = UniPoly::of({-2, 0, 1});  // X^2 - 2
    CHECK(p.negate_arg() == p);           // even polynomial
    UniPoly c = UniPoly::of({1, -3, 0, 2});
    CHECK(c.negate_arg().eval(Int(5)) == c.eval(Int(-5)));
    CHECK(c.reverse() == UniPoly::of({2, 0, -3, 1}));  // X^3 * c(1/X)
    CHECK(c.compose_power(2).eval(Int(3)) == c.eval(Int(9)));
    // p(X - 1/2) cleared to integers: 4X^2 - 4X - 7, root sqrt(2) + 1/2
    UniPoly sh = p.compose_linear(Int(1), Rat(-1, 2), Int(1));
    CHECK(sh == UniPoly::of({-7, -4, 4}));
}

TEST_CASE("Sturm chain counts real roots") {
    // (X^2 - 2)(X - 3): roots -sqrt2, sqrt2, 3
    UniPoly p = UniPoly::of({-2, 0, 1}) * UniPoly::of({-3, 1});
    SturmChain c(p);
    CHECK(c.count_all() == 3);
    CHECK(c.count(Rat(0), Rat(2)) == 1);
    CHECK(c.count(Rat(-2), Rat(2)) == 2);
    CHECK(c.count(Rat(2), Rat(4)) == 1);
    CHECK(c.count(Rat(4), Rat(100)) == 0);

    // X^2 + 1 has no real roots
    CHECK(SturmChain(UniPoly::of({1, 0, 1})).count_all() == 0);
}

TEST_CASE("isolate_real_roots on the worked cubics") {
    // X^3 - X^2 - X - 1: one real root ~ 1.8393
    auto r1 = isolate_real_roots(UniPoly::of({-1, -1, -1, 1}));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].approx() == doctest::Approx(1.8392867552141612).epsilon(1e-12));

    // X^2 - 1: two rational roots
    auto r2 = isolate_real_roots(UniPoly::of({-1, 0, 1}));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].is_value(Rat(-1)));
    CHECK(r2[1].is_value(Rat(1)));

    // X^3 - 2X^2 - 3X - 1: one real root ~ 3.0796 (bisection oracle)
    auto r3 = isolate_real_roots(UniPoly::of({-1, -3, -2, 1}));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].approx() == doctest::Approx(3.079595623491439).epsilon(1e-12));

    CHECK_THROWS_AS(isolate_real_roots(UniPoly{}), std::invalid_argument);
}

TEST_CASE("isolation matches dense floating sampling on random cubics") {
    // cross-check: count roots of 100 random cubics against sign changes of
    // a fine floating-point sweep (the sweep is the independent oracle)
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> cs(4);
        for (auto& x : cs) x = coeff(rng);
        if (cs[3] == 0) cs[3] = 1;
        UniPoly p(cs);
        UniPoly sf = p.square_free_part();
        auto roots = isolate_real_roots(p);

        double B = cauchy_root_bound(sf).get_d() + 1;
        auto evald = [&](double x) {
            double acc = 0;
            for (int i = sf.degree(); i >= 0; --i)
                acc = acc * x + sf.coeff(static_cast<std::size_t>(i)).get_d();
            return acc;
        };
        int flips = 0;
        const int N = 200000;
        double prev = evald(-B);
        for (int i = 1; i <= N; ++i) {
            double x = -B + 2 * B * i / N;
            double cur = evald(x);
            if (prev != 0 && cur != 0 && std::signbit(prev) != std::signbit(cur)) ++flips;
            if (cur != 0) prev = cur;
        }
        CHECK(static_cast<int>(roots.size()) >= flips);  // sweep can miss, never invent
        // intervals are disjoint and increasing
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi() <= roots[i + 1].lo());
        // sign-change invariant on every isolating interval
        for (const auto& r : roots)
            CHECK(r.defining().sign_at(r.lo()) * r.defining().sign_at(r.hi()) < 0);
    }
}

TEST_CASE("refine shrinks the interval and keeps the root") {
    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    CHECK(sqrt2.approx() > 0);
    auto fine = sqrt2.refined(Rat(1, 100));
    CHECK(fine.hi() - fine.lo() < Rat(1, 100));
    CHECK(fine.lo() >= Rat(141, 100));
    CHECK(fine.hi() <= Rat(142, 100));

    auto alpha = isolate_real_roots(UniPoly::of({-1, -1, -1, 1}))[0].refined(Rat(1, 10000));
    CHECK(alpha.lo() > Rat(18392, 10000));
    CHECK(alpha.hi() < Rat(18394, 10000));

    auto beta = isolate_real_roots(UniPoly::of({-1, -3, -2, 1}))[0].refined(Rat(1, 10000));
    CHECK(beta.lo() > Rat(30795, 10000));
    CHECK(beta.hi() < Rat(30797, 10000));

    // refinement is idempotent in value: rational probes agree before/after
    for (int num = -30; num <= 30; ++num) {
        Rat probe(num, 7);
        CHECK(sqrt2.compare(probe) == fine.compare(probe));
    }
}

TEST_CASE("alg_compare against rationals") {
    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    CHECK(sqrt2.compare(Rat(3, 2)) == Order::less);
    CHECK(sqrt2.compare(Rat(7, 5)) == Order::greater);

    auto alpha = isolate_real_roots(UniPoly::of({-1, -1, -1, 1}))[0];
    CHECK(alpha.compare(Rat(2)) == Order::less);
    CHECK(alpha.compare(Rat(1)) == Order::greater);

    auto one = AlgebraicNumber::from_rat(Rat(1));
    CHECK(one.compare(Rat(1)) == Order::equal);

    // exact equality through a non-linear defining polynomial
    auto two_as_root = isolate_real_roots(UniPoly::of({-2, 1}) * UniPoly::of({-2, 0, 1}))[2];
    CHECK(two_as_root.compare(Rat(2)) == Order::equal);
}

TEST_CASE("sign and floor") {
    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    CHECK(sqrt2.sgn() == 1);
    CHECK((-sqrt2).sgn() == -1);
    CHECK(AlgebraicNumber::from_rat(Rat(0)).sgn() == 0);
    // zero represented through a cubic: X^3 - X has roots -1, 0, 1
    auto zero = isolate_real_roots(UniPoly::of({0, -1, 0, 1}))[1];
    CHECK(zero.sgn() == 0);

    CHECK(sqrt2.floor() == 1);
    CHECK((-sqrt2).floor() == -2);
    CHECK(AlgebraicNumber::from_rat(Rat(7, 2)).floor() == 3);
    CHECK(AlgebraicNumber::from_rat(Rat(3)).floor() == 3);
    CHECK(AlgebraicNumber::from_rat(Rat(-3)).floor() == -3);
}

TEST_CASE("algebraic arithmetic: rational operand fast paths") {
    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    auto shifted = sqrt2.add(Rat(1, 2));
    CHECK(shifted.approx() == doctest::Approx(std::sqrt(2.0) + 0.5).epsilon(1e-12));
    CHECK(shifted.defining().eval(Rat(1, 2)) != 0);

    auto scaled = sqrt2.mul(Rat(-3));
    CHECK(scaled.approx() == doctest::Approx(-3 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(scaled.sgn() == -1);
    CHECK(sqrt2.mul(Rat(0)).is_value(Rat(0)));
}

TEST_CASE("algebraic arithmetic: add, mul, inverse, pow") {
    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    // sqrt2 * sqrt2 = 2 exactly
    CHECK(sqrt2.mul(sqrt2).is_value(Rat(2)));
    // sqrt2 + (-sqrt2) = 0 exactly
    CHECK(sqrt2.add(-sqrt2).is_value(Rat(0)));

    auto alpha = isolate_real_roots(UniPoly::of({-1, -1, -1, 1}))[0];
    auto alpha2 = alpha.pow(2);
    CHECK(alpha2.approx() == doctest::Approx(3.3829757679062374).epsilon(1e-12));
    // alpha^2 by resultant equals alpha*alpha
    CHECK(alpha2.compare(alpha.mul(alpha)) == Order::equal);
    // alpha^3 = alpha^2 + alpha + 1
    CHECK(alpha.pow(3).compare(alpha2.add(alpha).add(Rat(1))) == Order::equal);

    auto inv = alpha.inverse();
    CHECK(inv.mul(alpha).is_value(Rat(1)));
    CHECK(inv.approx() == doctest::Approx(1 / 1.8392867552141612).epsilon(1e-12));
    CHECK_THROWS_AS(AlgebraicNumber::from_rat(Rat(0)).inverse(), std::domain_error);

    // defining polynomial of x+y vanishes at approx(x)+approx(y)
    auto sum = sqrt2.add(alpha);
    double at = sum.approx();
    double v = 0;
    for (long i = sum.defining().degree(); i >= 0; --i)
        v = v * at + sum.defining().coeff(static_cast<std::size_t>(i)).get_d();
    CHECK(std::abs(v) < 1e-6);
}

TEST_CASE("nth_root") {
    auto eight = AlgebraicNumber::from_rat(Rat(8));
    CHECK(eight.nth_root(3).is_value(Rat(2)));

    auto sqrt2 = isolate_real_roots(UniPoly::of({-2, 0, 1}))[1];
    auto r6 = sqrt2.nth_root(3);  // 2^(1/6)
    CHECK(r6.pow(3).compare(sqrt2) == Order::equal);
    CHECK(r6.approx() == doctest::Approx(std::pow(2.0, 1.0 / 6)).epsilon(1e-12));

    auto mcube = AlgebraicNumber::from_rat(Rat(-27));
    CHECK(mcube.nth_root(3).is_value(Rat(-3)));
    CHECK_THROWS_AS(mcube.nth_root(2), std::domain_error);
}

TEST_CASE("inv cube root of the (2,3) region-1 minimum") {
    // m = (50371 - 1718*sqrt(859))/81675: defining polynomial derived by
    // clearing the radical: (81675 m - 50371)^2 = 1718^2 * 859
    // -> 6670805625 m^2 - 8228103450 m + 1718^2*859... expanded below
    Int A(81675), B(50371), C(1718);
    // (A m - B)^2 - C^2*859 = A^2 m^2 - 2AB m + B^2 - 859 C^2
    UniPoly def(std::vector<Int>{B * B - Int(859) * C * C, Int(-2) * A * B, A * A});
    auto roots = isolate_real_roots(def);
    REQUIRE(roots.size() == 2);
    // the minimum is the smaller root (conjugate has + sqrt)
    auto m = roots[0];
    CHECK(m.sgn() == 1);
    CHECK(m.approx() == doctest::Approx(2.2834824376154967e-4).epsilon(1e-9));
    auto bound = m.nth_root(3).inverse();
    // oracle: 16.36065831692025673... (30-digit evaluation of the radical)
    CHECK(bound.approx() == doctest::Approx(16.36065831692025673).epsilon(1e-12));
    // the 10-digit reference decimal is right to ~1e-6 only
    CHECK(std::abs(bound.approx() - 16.36065936) < 2e-6);
}

TEST_CASE("resultants and determinants") {
    // det of a singular integer matrix is 0; Bareiss with pivoting
    CHECK(det_bareiss({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
    CHECK(det_bareiss({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
    CHECK(det_bareiss({{Int(2), Int(0), Int(1)},
                       {Int(1), Int(3), Int(2)},
                       {Int(0), Int(1), Int(4)}}) == 2 * (3 * 4 - 2) - 0 + 1 * (1 - 0));

    // Res(X^2-2, X^2-3) = (2-3)^2 = 1; shares no roots
    CHECK(resultant_int(UniPoly::of({-2, 0, 1}), UniPoly::of({-3, 0, 1})) == 1);
    // common root makes the resultant vanish
    CHECK(resultant_int(UniPoly::of({-2, 0, 1}), UniPoly::of({-2, 0, 1}) * UniPoly::of({1, 1})) ==
          0);
    // classic: Res(X^2-2, X^2-x... with distinct constants) is product of
    // pairwise differences; spot value Res(X-a, X-b) = b - a... degree 1:
    CHECK(resultant_int(UniPoly::of({-5, 1}), UniPoly::of({-7, 1})) == -2);
}

TEST_CASE("bivariate resultant eliminates u") {
    // a(u) = u^2 - 2, b(u,v) = v - u: Res_u = v^2 - 2 (defining of sqrt2)
    BiPoly a = BiPoly::from_u_poly(UniPoly::of({-2, 0, 1}));
    BiPoly b;
    b.cu.resize(2);
    b.cu[0] = UniPoly::of({0, 1});
    b.cu[1] = UniPoly::constant(Int(-1));
    UniPoly r = resultant_elim_u(a, b);
    CHECK(r.primitive() == UniPoly::of({-2, 0, 1}));
}
