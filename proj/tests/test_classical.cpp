#include "support.hpp"

#include "sigmatau/classical.hpp"
#include "sigmatau/errors.hpp"

using namespace sigmatau;

namespace {

CurveContextPtr g2() { return std::make_shared<const CurveContext>(make_curve_spec(Family::HyperellipticG2)); }

} // namespace

TEST_CASE("Jacobi inversion from the Klein expansion")
{
    auto c = g2();
    KleinExpansion e = klein_expand(*c, 1);
    CHECK(e.first == -2);
    CHECK(e.equations().size() == 3);
    JacobiInversion j = jacobi_inversion_extract(*c, e);
    CHECK(j.jip2 == c->parse("p12 + xk*p11 - xk^2"));
    CHECK(j.jip2a == c->parse("yk + p112 + xk*p111"));
    MultiPoly shown = c->parse("(1/2*p1111 - 3*p11^2 - 1/2*a4*p11 - 2*p12 - 1/4*a3)*xk + 1/2*p1112 - 1/2*a4*p12 - "
                               "3*p11*p12 + p22");
    CHECK(j.linear == shown * Rational(4));
    // separating powers of x_k loses nothing
    CHECK(j.coeff_xk1 * c->parse("xk") + j.coeff_xk0 == j.linear);
    REQUIRE(j.relations.size() == 3);
    CHECK(j.relations[0].expr == parse_relation(*c, "p1111 = 6*p11^2 + a4*p11 + 4*p12 + 1/2*a3"));
    CHECK(j.relations[1].expr == parse_relation(*c, "p1112 = 6*p11*p12 + a4*p12 - 2*p22"));
    CHECK(j.relations[2].expr == parse_relation(*c, "p122 + p11*p112 - p12*p111 = 0"));
    CHECK(j.relations[2].cls == RelationClass::Quasilinear);
}

TEST_CASE("Klein relations agree with the Pluecker engine")
{
    auto c = g2();
    TauModel m(c, 7);
    RelationDB db(c);
    derive_through(7, db, m);
    JacobiInversion j = jacobi_inversion_extract(*c, klein_expand(*c, 1));
    for (const Relation& r : j.relations) {
        bool found = false;
        for (const Relation* s : db.at_weight(r.weight))
            found = found || canonical_form(s->expr, db) == canonical_form(r.expr, db);
        CHECK_MESSAGE(found, r.to_string());
    }
}

TEST_CASE("higher Klein coefficients vanish modulo the derived relations")
{
    auto c = g2();
    TauModel m(c, 9);
    RelationDB db(c);
    derive_through(9, db, m);
    KleinExpansion e = klein_expand(*c, 3);
    JacobiInversion j = jacobi_inversion_extract(*c, e);
    MultiPoly y_value = c->parse("-p112 - xk*p111");
    for (int n = 1; n < 3; ++n) {
        MultiPoly En = reduce_mod_jip2(*c, e.at(n).substitute(e.yk, y_value), e.xk);
        CHECK(En.degree(e.xk) <= 1);
        for (unsigned k = 0; k <= 1; ++k)
            CHECK(db.reduce(En.coefficient_of(e.xk, k)).is_zero());
    }
}

TEST_CASE("unsupported families")
{
    CurveContext t(make_curve_spec(Family::CyclicTrigonal34));
    CHECK_THROWS_AS(klein_expand(t, 1), ConfigError);
}
