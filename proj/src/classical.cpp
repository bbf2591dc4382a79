#include "sigmatau/classical.hpp"
#include "sigmatau/errors.hpp"

namespace sigmatau {

namespace {

LaurentSeries map_coefficients(const LaurentSeries& s, const std::function<MultiPoly(const MultiPoly&)>& f)
{
    LaurentSeries out(s.order());
    for (const auto& [k, v] : s.coefficients())
        out.add(k, f(v));
    return out;
}

// ℘_J(u + δ) = Σ_n (δ·∂)^n ℘_J / n!
LaurentSeries taylor_shift(const CurveContext& c, const MultiPoly& f, const std::vector<LaurentSeries>& delta, int order)
{
    LaurentSeries term = LaurentSeries::monomial(f, 0, order), sum = term;
    for (int n = 1; n < order && !term.is_zero(); ++n) {
        LaurentSeries next(order);
        for (int i = 1; i <= c.genus(); ++i) {
            LaurentSeries d = map_coefficients(term, [&](const MultiPoly& p) { return u_derivative(c, p, i); });
            next += LaurentSeries::multiply(delta[i - 1], d, order);
        }
        next *= Rational(1) / n;
        term = next;
        sum += term;
    }
    return sum;
}

} // namespace

std::vector<MultiPoly> KleinExpansion::equations() const
{
    std::vector<MultiPoly> out;
    for (int n = first; n < difference.order(); ++n)
        out.push_back(difference.coeff(n));
    return out;
}

KleinExpansion klein_expand(const CurveContext& c, int order)
{
    if (c.spec().family != Family::HyperellipticG2)
        throw ConfigError("klein_expand: only the genus-2 hyperelliptic family is supported");
    const int n = c.spec().n, s = c.spec().s;
    KleinExpansion out;
    out.xk = c.table()->intern("xk", n, SymbolKind::Coordinate, {4});
    out.yk = c.table()->intern("yk", s, SymbolKind::Coordinate, {5});

    // U_i(x,y) = f_y · du_i/dx = 2y · coeff x^p / y
    const int M = order + 2 * n; // U_1(x) = 2x has a pole of order n
    LocalExpansion e = newton_puiseux_at_infinity(c, M + 2 * s + 2);
    std::vector<LaurentSeries> du = differentials(c, e), delta;
    for (const auto& d : du)
        delta.push_back(d.integrate().truncated(M + n));

    std::vector<LaurentSeries> U_here;
    std::vector<MultiPoly> U_there;
    for (const DifferentialForm& f : c.differential_forms()) {
        if (f.y_power != 1)
            throw ConfigError("klein_expand: unexpected differential");
        LaurentSeries xp = f.x_power == 0 ? LaurentSeries::monomial(MultiPoly(1), 0, LaurentSeries::kExact)
                                          : e.x.pow(f.x_power);
        U_here.push_back(xp.scaled(MultiPoly(2 * f.coeff)));
        U_there.push_back(MultiPoly::symbol(out.xk).pow(f.x_power) * (2 * f.coeff));
    }

    const int g = c.genus();
    LaurentSeries lhs(order);
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            LaurentSeries wp = taylor_shift(c, MultiPoly::symbol(c.wp({i, j})), delta, M + n);
            lhs += LaurentSeries::multiply(wp, U_here[i - 1], order).scaled(U_there[j - 1]);
        }

    KleinianPolar pol = kleinian_polar(c);
    MultiPoly F = pol.full.substitute(c.z(), MultiPoly::symbol(out.xk)).substitute(c.w(), MultiPoly::symbol(out.yk));
    std::map<const SymbolInfo*, LaurentSeries> vals{{c.x().info(), e.x}, {c.y().info(), e.y}};
    LaurentSeries Fs = evaluate(F, vals, order + 4 * n);
    LaurentSeries diff = e.x - LaurentSeries::monomial(MultiPoly::symbol(out.xk), 0, LaurentSeries::kExact);
    LaurentSeries inv = (diff * diff).inverse(order + 3 * s);
    LaurentSeries rhs = LaurentSeries::multiply(Fs, inv, order);

    out.difference = lhs - rhs;
    if (out.difference.order() < order)
        throw TruncationError("klein_expand: reached only order " + std::to_string(out.difference.order()));
    out.difference = out.difference.truncated(order);
    out.first = out.difference.min_exponent();
    return out;
}

MultiPoly reduce_mod_jip2(const CurveContext& c, const MultiPoly& p, Symbol xk)
{
    MultiPoly r = p;
    const MultiPoly sq = MultiPoly::symbol(c.wp({1, 1})) * MultiPoly::symbol(xk) + MultiPoly::symbol(c.wp({1, 2}));
    for (unsigned d = r.degree(xk); d >= 2; d = r.degree(xk)) {
        MultiPoly top = r.coefficient_of(xk, d);
        r -= top * MultiPoly::symbol(xk).pow(d);
        r += top * MultiPoly::symbol(xk).pow(d - 2) * sq;
    }
    return r;
}

JacobiInversion jacobi_inversion_extract(const CurveContext& c, const KleinExpansion& e)
{
    JacobiInversion out;
    const MultiPoly xk = MultiPoly::symbol(e.xk), yk = MultiPoly::symbol(e.yk);

    MultiPoly E2 = e.at(e.first);
    Rational lead = E2.coefficient(Monomial::of(e.xk, 2));
    if (lead == 0)
        throw InconsistencyError("klein: leading coefficient lacks x_k^2: " + E2.to_string());
    out.jip2 = E2 * (Rational(-1) / lead);

    MultiPoly E1 = e.at(e.first + 1);
    MultiPoly cy = E1.coefficient_of(e.yk, 1);
    if (!cy.is_constant() || cy.is_zero() || E1.degree(e.yk) != 1)
        throw InconsistencyError("klein: next coefficient is not linear in y_k: " + E1.to_string());
    out.jip2a = E1 * (Rational(1) / cy.constant_term());
    MultiPoly y_value = yk - out.jip2a;

    MultiPoly E0 = e.at(e.first + 2).substitute(e.yk, y_value);
    out.linear = reduce_mod_jip2(c, E0, e.xk);
    if (out.linear.degree(e.xk) > 1 || out.linear.contains(e.yk))
        throw InconsistencyError("klein: x_k elimination failed: " + out.linear.to_string());
    out.coeff_xk1 = out.linear.coefficient_of(e.xk, 1);
    out.coeff_xk0 = out.linear.coefficient_of(e.xk, 0);

    Relation r1111 = classify(out.coeff_xk1, 4);
    Relation r1112 = classify(out.coeff_xk0, 6);
    MultiPoly cross = u_derivative(c, r1111.expr, 2) - u_derivative(c, r1112.expr, 1);
    Relation ql = classify(cross, 7);
    out.relations = {r1111, r1112, ql};
    return out;
}

} // namespace sigmatau
