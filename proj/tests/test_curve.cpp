#include <doctest.h>

#include "sigmatau/curve.hpp"
#include "sigmatau/errors.hpp"

using namespace sigmatau;

namespace {

CurveContext g2() { return CurveContext(make_curve_spec(Family::HyperellipticG2)); }
CurveContext tri() { return CurveContext(make_curve_spec(Family::CyclicTrigonal34)); }

} // namespace

TEST_CASE("parse_spec")
{
    CurveSpec a = parse_spec("family = hyperelliptic_g2\n");
    CHECK(a.n == 2);
    CHECK(a.s == 5);
    CHECK(a.genus == 2);
    CHECK(a.gaps == std::vector<int>{1, 3});
    CurveSpec b = parse_spec("# trigonal\nfamily=cyclic_trigonal_34\nmu3 = -2/6\n");
    CHECK(b.genus == 3);
    CHECK(b.gaps == std::vector<int>{1, 2, 5});
    CHECK(*b.params[0].value == make_rational(-1, 3));
    CurveSpec c = parse_spec("family = hyperelliptic_g2\nalpha4 = 3/2\n");
    CHECK(c.fingerprint() == "family=hyperelliptic_g2;a0=*;a1=*;a2=*;a3=*;a4=3/2");
    CHECK_THROWS_AS(parse_spec("family = foo"), ConfigError);
    CHECK_THROWS_AS(parse_spec("alpha4 = 1"), ConfigError);
    CHECK_THROWS_AS(parse_spec("family = hyperelliptic_g2\nmu3 = 1"), ConfigError);
    CHECK_THROWS_AS(parse_spec("family = hyperelliptic_g2\nalpha5 = 1"), ConfigError);
    CHECK_THROWS_AS(parse_spec("family = hyperelliptic_g2\nalpha4 = 1/x"), ConfigError);
    CHECK_THROWS_AS(parse_spec("family = hyperelliptic_g2\nalpha4 = 1\na4 = 2"), ConfigError);
}

TEST_CASE("genus-2 Puiseux expansion")
{
    CurveContext c = g2();
    LocalExpansion e = newton_puiseux_at_infinity(c, 20);
    CHECK(e.x.coeff(-2) == MultiPoly(1));
    CHECK(e.y.coeff(-5) == MultiPoly(-2));
    CHECK(e.y.coeff(-4).is_zero());
    CHECK(e.y.coeff(-3) == c.parse("-1/4*a4")); // -2 * a4/8
    // independent defect check: y^2 - P(x) by hand
    LaurentSeries y2 = e.y * e.y;
    LaurentSeries P(y2.order());
    for (int k = 0; k <= 5; ++k)
        P.add(-2 * k, c.p_coeffs()[k]);
    LaurentSeries d = y2 - P;
    CHECK(d.order() >= 20);
    CHECK(d.is_zero());
    // y is odd in ξ
    for (const auto& [k, v] : e.y.coefficients())
        CHECK(k % 2 != 0);
}

TEST_CASE("monomial curve expansion is exact")
{
    CurveSpec s = make_curve_spec(Family::HyperellipticG2);
    for (auto& p : s.params)
        p.value = Rational(0);
    CurveContext c(s);
    LocalExpansion e = newton_puiseux_at_infinity(c, 15);
    CHECK(e.y.coefficients().size() == 1);
    CHECK(e.y.coeff(-5) == MultiPoly(-2));
}

TEST_CASE("trigonal Puiseux expansion")
{
    CurveContext c = tri();
    LocalExpansion e = newton_puiseux_at_infinity(c, 20);
    CHECK(e.y.coeff(-4) == MultiPoly(1));
    CHECK(e.y.coeff(-1) == c.parse("1/3*mu3"));
    LaurentSeries y3 = e.y * e.y * e.y;
    LaurentSeries P(y3.order());
    for (int k = 0; k <= 4; ++k)
        P.add(-3 * k, c.p_coeffs()[k]);
    CHECK((y3 - P).is_zero());
    CHECK(y3.order() >= 20);
}

TEST_CASE("holomorphic differentials")
{
    CurveContext c = g2();
    auto du = differentials(c, newton_puiseux_at_infinity(c, 20));
    CHECK(du[0].valuation() == 0);
    CHECK(du[0].coeff(0) == MultiPoly(1));
    CHECK(du[1].valuation() == 2);
    CHECK(du[1].coeff(2) == MultiPoly(1));
    LaurentSeries u2 = du[1].integrate();
    for (const auto& [k, v] : u2.coefficients())
        CHECK(k % 2 != 0);

    CurveContext t = tri();
    auto dt = differentials(t, newton_puiseux_at_infinity(t, 20));
    CHECK(dt[0].valuation() == 0);
    CHECK(dt[1].valuation() == 1);
    CHECK(dt[2].valuation() == 4);
    // the trigonal frame has a uniform leading sign of -1
    CHECK(dt[0].coeff(0) == MultiPoly(-1));
    CHECK(dt[1].coeff(1) == MultiPoly(-1));
    CHECK(dt[2].coeff(4) == MultiPoly(-1));
}

TEST_CASE("winding vectors: gap structure, parity and weights")
{
    for (Family f : {Family::HyperellipticG2, Family::CyclicTrigonal34}) {
        CurveContext c{make_curve_spec(f)};
        WindingData wd = winding_vectors(c, 14);
        for (int i = 1; i <= c.genus(); ++i) {
            int wi = c.gap(i);
            CHECK(wd.at(wi, i).is_constant());
            CHECK(!wd.at(wi, i).is_zero());
            for (int k = 1; k <= wd.K(); ++k) {
                const MultiPoly& r = wd.at(k, i);
                if (k < wi)
                    CHECK(r.is_zero());
                CHECK(r.is_homogeneous(k - wi));
                if (f == Family::HyperellipticG2 && k % 2 == 0)
                    CHECK(r.is_zero());
                if (f == Family::CyclicTrigonal34 && (k - wi) % 3 != 0)
                    CHECK(r.is_zero());
            }
        }
    }
    CurveContext c = g2();
    WindingData wd = winding_vectors(c, 5);
    CHECK(wd.at(3, 1) == c.parse("-1/8*a4"));
    CHECK(wd.at(3, 2) == MultiPoly(1));
    CHECK(wd.at(5, 1) == c.parse("-1/8*a3 + 3/128*a4^2"));
}

TEST_CASE("Kleinian polar")
{
    CurveContext c = g2();
    KleinianPolar k = kleinian_polar(c);
    CHECK(k.core == c.parse("4*x^2*z^2*(x+z) + 2*a4*x^2*z^2 + a3*x*z*(x+z) + 2*a2*x*z + a1*(x+z) + 2*a0"));
    CHECK(k.full == k.core + c.parse("2*y*w"));
    // F(x,x) = 2 P(x) = 2y² on the curve
    MultiPoly Fxx = k.core.substitute(c.z(), MultiPoly::symbol(c.x()));
    MultiPoly P;
    for (int j = 0; j <= 5; ++j)
        P += c.p_coeffs()[j].mul_monomial(Monomial::of(c.x(), j));
    CHECK(Fxx == P * Rational(2));

    CurveContext t = tri();
    KleinianPolar kt = kleinian_polar(t);
    CHECK(kt.core == t.parse("3*mu12 + (z+2*x)*mu9 + x*(x+2*z)*mu6 + 3*mu3*x^2*z + x^2*z^2 + 2*x^3*z"));
    // 𝓕(Q,Q) = f_y(Q)² once y³ is replaced by P(x)
    for (const CurveContext* cc : {&c, &t}) {
        KleinianPolar kk = kleinian_polar(*cc);
        MultiPoly X = MultiPoly::symbol(cc->x()), Y = MultiPoly::symbol(cc->y());
        MultiPoly diag = kk.full.substitute(cc->z(), X).substitute(cc->w(), Y);
        int n = cc->spec().n;
        MultiPoly fy2 = Y.pow(2 * (n - 1)) * Rational(n * n);
        MultiPoly Px;
        for (int j = 0; j <= cc->spec().s; ++j)
            Px += cc->p_coeffs()[j].mul_monomial(Monomial::of(cc->x(), j));
        auto reduce = [&](MultiPoly p) {
            for (int pass = 0; pass < 8; ++pass) {
                MultiPoly r;
                for (const auto& [m, co] : p.terms()) {
                    unsigned e = m.degree(cc->y());
                    if (e >= unsigned(n))
                        r += (Px * MultiPoly(m.without(cc->y()) * Monomial::of(cc->y(), e - n), co));
                    else
                        r.add_term(m, co);
                }
                p = r;
            }
            return p;
        };
        CHECK(reduce(diag) == reduce(fy2));
    }
}

TEST_CASE("omega_alg genus 2")
{
    CurveContext c = g2();
    OmegaAlgTable t = omega_alg(c, 12);
    CHECK(t.at(0, 0) == c.parse("-1/8*a4"));
    CHECK(t.at(0, 1).is_zero());
    CHECK(t.at(1, 1).is_zero());
    CHECK(t.at(0, 2) == c.parse("-(16*a3 - 3*a4^2)/128"));
    CHECK(t.at(0, 4) == c.parse("-1/8*a2 + 3/64*a3*a4 - 5/1024*a4^3"));
    CHECK(t.at(2, 2) == c.parse("-3/8*a2 + 1/16*a3*a4 - 3/512*a4^3"));
    for (int k = 0; k < 12; ++k)
        for (int l = 0; l < 12; ++l) {
            CHECK(t.at(k, l) == t.at(l, k));
            CHECK(t.at(k, l).is_homogeneous(k + l + 2));
            if (k % 2 || l % 2)
                CHECK(t.at(k, l).is_zero());
        }
}

TEST_CASE("omega_alg trigonal")
{
    CurveContext c = tri();
    OmegaAlgTable t = omega_alg(c, 12);
    CHECK(t.at(0, 0).is_zero());
    CHECK(t.at(0, 1) == c.parse("-2/3*mu3"));
    CHECK(t.at(0, 4) == c.parse("-2/3*mu6 + 5/9*mu3^2"));
    CHECK(t.at(1, 3) == c.parse("-2/3*mu6 + 4/9*mu3^2"));
    CHECK(t.at(2, 2).is_zero());
    for (int k = 0; k < 12; ++k)
        for (int l = 0; l < 12; ++l) {
            CHECK(t.at(k, l) == t.at(l, k));
            CHECK(t.at(k, l).is_homogeneous(k + l + 2));
            if ((k + l) % 3 != 1)
                CHECK(t.at(k, l).is_zero());
        }
}

TEST_CASE("omega_alg of the monomial curve vanishes")
{
    for (Family f : {Family::HyperellipticG2, Family::CyclicTrigonal34}) {
        CurveSpec s = make_curve_spec(f);
        for (auto& p : s.params)
            p.value = Rational(0);
        CurveContext c(s);
        OmegaAlgTable t = omega_alg(c, 6);
        for (int k = 0; k < 6; ++k)
            for (int l = 0; l < 6; ++l)
                CHECK(t.at(k, l).is_zero());
    }
}
