#include "sigmatau/relation.hpp"
#include "sigmatau/errors.hpp"
#include "sigmatau/schur.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace sigmatau {

namespace {

struct IndexContent {
    int n4 = 0;      // factors (with multiplicity) of ℘ with ≥ 4 indices
    int n3 = 0;      // 3-index ℘ factors
    int max3 = 0;    // largest weight of a 3-index factor
    bool zeta = false;
};

IndexContent content(const Monomial& m)
{
    IndexContent c;
    for (const auto& [s, e] : m.factors()) {
        if (s.kind() == SymbolKind::Zeta) {
            c.zeta = true;
        } else if (s.kind() == SymbolKind::Wp) {
            int n = int(s.key().size());
            if (n >= 4)
                c.n4 += e;
            else if (n == 3) {
                c.n3 += e;
                c.max3 = std::max(c.max3, s.weight());
            }
        }
    }
    return c;
}

bool pure_wp_power(const Monomial& m)
{
    return m.factors().size() == 1 && m.factors()[0].first.kind() == SymbolKind::Wp;
}

Monomial zeta_part(const Monomial& m)
{
    std::vector<std::pair<Symbol, unsigned>> f;
    for (const auto& [s, e] : m.factors())
        if (s.kind() == SymbolKind::Zeta)
            f.emplace_back(s, e);
    return Monomial::from_factors(std::move(f));
}

std::string head(const MultiPoly& p, std::size_t n = 6)
{
    MultiPoly h;
    for (const auto& [m, c] : p.terms()) {
        if (n-- == 0)
            return h.to_string() + " + ...";
        h.add_term(m, c);
    }
    return h.to_string();
}

std::vector<Partition> merge_sources(std::vector<Partition> a)
{
    std::sort(a.begin(), a.end(), std::greater<>());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

} // namespace

std::string to_string(RelationClass c)
{
    switch (c) {
    case RelationClass::FourIndex: return "FOUR_INDEX";
    case RelationClass::QuadThreeIndex: return "QUAD_THREE_INDEX";
    case RelationClass::Quasilinear: return "QUASILINEAR";
    case RelationClass::QuarticEven: return "QUARTIC_EVEN";
    case RelationClass::Other: return "OTHER";
    }
    return "OTHER";
}

RelationClass relation_class_from_string(const std::string& s)
{
    for (auto c : {RelationClass::FourIndex, RelationClass::QuadThreeIndex, RelationClass::Quasilinear,
                   RelationClass::QuarticEven, RelationClass::Other})
        if (to_string(c) == s)
            return c;
    throw ConfigError("unknown relation class '" + s + "'");
}

MultiPoly Relation::rhs() const
{
    if (!solved)
        throw ConfigError("relation is not in solved form");
    return MultiPoly(*solved) - expr;
}

std::string Relation::to_string() const
{
    if (solved) {
        MultiPoly r = rhs();
        return solved->to_string() + " = " + (r.is_zero() ? std::string("0") : r.to_string());
    }
    return expr.to_string() + " = 0";
}

bool is_rule(const Relation& r)
{
    return r.solved && unknown_class(*r.solved) <= 1;
}

int unknown_class(const Monomial& m)
{
    IndexContent c = content(m);
    if (c.n4 > 0)
        return 0;
    if (c.n3 >= 2)
        return 1;
    if (c.n3 == 1)
        return 2;
    return 3;
}

ColumnOrder unknown_order(bool basic_pivotable)
{
    ColumnOrder o;
    o.pivotable = [basic_pivotable](const Monomial& m) {
        IndexContent c = content(m);
        if (c.zeta)
            return false;
        return basic_pivotable || c.n4 > 0 || c.n3 > 0;
    };
    o.compare = [](const Monomial& a, const Monomial& b) {
        int ca = unknown_class(a), cb = unknown_class(b);
        if (ca != cb)
            return ca < cb ? 1 : -1;
        if (ca == 2) {
            int wa = content(a).max3, wb = content(b).max3;
            if (wa != wb)
                return wa > wb ? 1 : -1;
        }
        if (ca == 3) {
            bool pa = pure_wp_power(a), pb = pure_wp_power(b);
            if (pa != pb)
                return pa ? 1 : -1;
        }
        return term_compare(a, b);
    };
    return o;
}

Relation classify(const MultiPoly& r, int W)
{
    if (r.is_zero())
        throw ConfigError("classify: zero expression");
    if (!r.is_homogeneous(W))
        throw ConfigError("classify: expression is not homogeneous of weight " + std::to_string(W));
    ColumnOrder order = unknown_order(true);
    const Monomial* lead = nullptr;
    for (const auto& t : r.terms()) {
        if (content(t.first).zeta)
            throw InconsistencyError("classify: ζ in " + head(r));
        if (!lead || order.compare(t.first, *lead) > 0)
            lead = &t.first;
    }
    Relation out;
    out.weight = W;
    out.expr = r * (Rational(1) / r.coefficient(*lead));
    const Monomial L = *lead;
    bool rest_basic = true, ql = true;
    for (const auto& t : out.expr.terms()) {
        int k = unknown_class(t.first);
        if (t.first != L && k != 3)
            rest_basic = false;
        if (k < 2)
            ql = false;
    }
    const bool single4 =
        L.factors().size() == 1 && L.factors()[0].second == 1 && L.factors()[0].first.key().size() == 4;
    const bool quad2 = unknown_class(L) == 1 && L.total_degree() == 2;
    switch (unknown_class(L)) {
    case 0:
        if (single4 && rest_basic)
            out.cls = RelationClass::FourIndex;
        break;
    case 1:
        if (quad2 && rest_basic)
            out.cls = RelationClass::QuadThreeIndex;
        break;
    case 2:
        if (ql)
            out.cls = RelationClass::Quasilinear;
        break;
    default:
        if (parity(out.expr) == 1)
            out.cls = RelationClass::QuarticEven;
        break;
    }
    // OTHER keeps a solved monomial when it still rewrites one unknown in
    // terms of free ones
    if (single4 || quad2 || out.cls == RelationClass::Quasilinear)
        out.solved = L;
    return out;
}

RelationDB::RelationDB(CurveContextPtr c) : c_(std::move(c)) {}

RelationDB::RelationDB(const RelationDB& o)
    : c_(o.c_), complete_(o.complete_), rels_(o.rels_), rule_index_(o.rule_index_), wp_rules_(o.wp_rules_),
      quad_rules_(o.quad_rules_)
{
}

void RelationDB::mark_complete(int W)
{
    if (W != complete_ + 1)
        throw ConfigError("layers must be completed in order: next is " + std::to_string(complete_ + 1));
    complete_ = W;
}

void RelationDB::add(Relation r)
{
    std::lock_guard lock(mu_);
    if (r.solved && rule_index_.count(*r.solved))
        throw InconsistencyError("two relations solved for " + r.solved->to_string());
    std::size_t idx = rels_.size();
    if (r.solved)
        rule_index_.emplace(*r.solved, idx);
    if (is_rule(r)) {
        if (unknown_class(*r.solved) == 0)
            wp_rules_[r.solved->factors()[0].first.key()] = r.rhs();
        else
            quad_rules_.emplace_back(*r.solved, r.rhs());
    }
    rels_.push_back(std::move(r));
    invalidate();
}

void RelationDB::invalidate()
{
    wp_memo_.clear();
    nf_memo_.clear();
    span_memo_.clear();
}

std::vector<const Relation*> RelationDB::at_weight(int W) const
{
    std::vector<const Relation*> out;
    for (const auto& r : rels_)
        if (r.weight == W)
            out.push_back(&r);
    return out;
}

const Relation* RelationDB::solved_for(const Monomial& m) const
{
    auto it = rule_index_.find(m);
    return it == rule_index_.end() ? nullptr : &rels_[it->second];
}

const std::optional<MultiPoly>& RelationDB::wp_value(const std::vector<int>& J) const
{
    std::lock_guard lock(mu_);
    if (auto it = wp_memo_.find(J); it != wp_memo_.end())
        return it->second;
    std::optional<MultiPoly> v;
    if (J.size() == 4) {
        if (auto it = wp_rules_.find(J); it != wp_rules_.end())
            v = normal_form(it->second);
    } else {
        // ℘_J = ∂_i ℘_{J-i}; try removing the largest index first
        for (auto it = J.rbegin(); it != J.rend() && !v; ++it) {
            if (it != J.rbegin() && *it == *(it - 1))
                continue;
            std::vector<int> K = J;
            K.erase(K.begin() + (J.rend() - it - 1));
            if (const auto& base = wp_value(K))
                v = normal_form(u_derivative(*c_, *base, *it));
        }
    }
    return wp_memo_.emplace(J, std::move(v)).first->second;
}

const MultiPoly& RelationDB::nf_monomial(const Monomial& m) const
{
    std::lock_guard lock(mu_);
    if (auto it = nf_memo_.find(m); it != nf_memo_.end())
        return it->second;
    MultiPoly v;
    bool rewritten = false;
    for (const auto& [s, e] : m.factors()) {
        if (s.kind() != SymbolKind::Wp || s.key().size() < 4)
            continue;
        if (const auto& val = wp_value(s.key())) {
            v = normal_form(*val * MultiPoly(m.quotient(Monomial::of(s))));
            rewritten = true;
            break;
        }
    }
    if (!rewritten && content(m).n3 >= 2) {
        for (const auto& [lhs, rhs] : quad_rules_) {
            if (lhs.divides(m)) {
                v = normal_form(rhs * MultiPoly(m.quotient(lhs)));
                rewritten = true;
                break;
            }
        }
    }
    if (!rewritten)
        v = MultiPoly(m);
    return nf_memo_.emplace(m, std::move(v)).first->second;
}

MultiPoly RelationDB::normal_form(const MultiPoly& e) const
{
    MultiPoly out;
    for (const auto& [m, c] : e.terms()) {
        const MultiPoly& n = nf_monomial(m);
        if (n.size() == 1 && n.terms().begin()->second == 1)
            out.add_term(n.terms().begin()->first, c);
        else
            out += n * c;
    }
    return out;
}

const std::vector<Monomial>& RelationDB::basic_monomials(int d) const
{
    std::lock_guard lock(mu_);
    if (auto it = basic_memo_.find(d); it != basic_memo_.end())
        return it->second;
    std::vector<Symbol> syms;
    for (int i = 1; i <= c_->genus(); ++i)
        for (int j = i; j <= c_->genus(); ++j)
            syms.push_back(c_->wp({i, j}));
    for (Symbol s : c_->param_symbols())
        syms.push_back(s);
    std::vector<Monomial> out;
    std::vector<std::pair<Symbol, unsigned>> cur;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (left == 0) {
            out.push_back(Monomial::from_factors(cur));
            return;
        }
        if (i == syms.size())
            return;
        int w = syms[i].weight();
        for (int e = 0; e * w <= left; ++e) {
            if (e > 0)
                cur.emplace_back(syms[i], unsigned(e));
            self(self, i + 1, left - e * w);
            if (e > 0)
                cur.pop_back();
        }
    };
    if (d >= 0)
        rec(rec, 0, d);
    return basic_memo_.emplace(d, std::move(out)).first->second;
}

const RowEchelon& RelationDB::span(int w, int below) const
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(w, std::min(below, w + 1));
    if (auto it = span_memo_.find(key); it != span_memo_.end())
        return it->second;
    RowEchelon ech(unknown_order(true));
    for (const auto& r : rels_) {
        if (is_rule(r))
            continue;
        if (r.weight > w || r.weight >= key.second)
            continue;
        for (const Monomial& b : basic_monomials(w - r.weight))
            ech.insert(normal_form(r.expr.mul_monomial(b)));
    }
    return span_memo_.emplace(key, std::move(ech)).first->second;
}

MultiPoly RelationDB::reduce(const MultiPoly& e, std::optional<int> below) const
{
    int b = below.value_or(INT_MAX);
    MultiPoly r = normal_form(e);
    std::map<Monomial, MultiPoly, TermGreater> groups;
    for (const auto& [m, c] : r.terms()) {
        Monomial z = zeta_part(m);
        groups[z].add_term(z.is_one() ? m : m.quotient(z), c);
    }
    MultiPoly out;
    for (const auto& [z, coeff] : groups)
        for (int w : coeff.weights()) {
            MultiPoly red = span(w, b).reduce(coeff.homogeneous_component(w));
            out += z.is_one() ? red : red.mul_monomial(z);
        }
    return out;
}

MultiPoly reduce_mod_db(const MultiPoly& e, const RelationDB& db) { return db.reduce(e); }

MultiPoly plucker_relation(const Partition& lambda, const TauModel& model, bool allow_rank3)
{
    int r = lambda.rank();
    if (r != 2 && !(r == 3 && allow_rank3))
        throw ConfigError("plucker_relation: " + lambda.to_string() + " has rank " + std::to_string(r));
    Frobenius f = lambda.frobenius();
    std::vector<std::vector<MultiPoly>> M(r, std::vector<MultiPoly>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            M[i][j] = model.xi(Partition::hook(f.arms[i], f.legs[j]));
    return model.xi(lambda) - determinant(M);
}

LayerResult derive_at_weight(int W, const RelationDB& db, const TauModel& model, const LayerOptions& opt)
{
    if (db.complete_through() < W - 1)
        throw ConfigError("derive_at_weight(" + std::to_string(W) + "): layers below are incomplete (complete through " +
                          std::to_string(db.complete_through()) + ")");
    if (model.max_weight() < W)
        throw TruncationError("derive_at_weight: tau model only reaches weight " + std::to_string(model.max_weight()));
    if (model.curve().spec().fingerprint() != db.fingerprint())
        throw ConfigError("derive_at_weight: model and database describe different curves");

    LayerResult res;
    res.weight = W;
    std::vector<Partition> diagrams = enumerate_rank2(W);
    if (opt.allow_rank3) {
        auto r3 = enumerate_rank(W, 3);
        diagrams.insert(diagrams.end(), r3.begin(), r3.end());
    }
    res.diagrams = int(diagrams.size());
    std::vector<Partition> reps = transpose_representatives(diagrams);
    res.classes = int(reps.size());
    const bool hyperelliptic = db.curve().spec().family == Family::HyperellipticG2;

    std::vector<MultiPoly> raw;
    std::vector<std::vector<Partition>> raw_src;
    for (const Partition& p : reps) {
        Partition t = p.transpose();
        if (hyperelliptic || t == p) {
            raw.push_back(plucker_relation(p, model, opt.allow_rank3));
            raw_src.push_back(merge_sources({p, t}));
        } else {
            MultiPoly a = plucker_relation(p, model, opt.allow_rank3);
            MultiPoly b = plucker_relation(t, model, opt.allow_rank3);
            raw.push_back(a + b);
            raw.push_back(a - b);
            raw_src.push_back({p, t});
            raw_src.push_back({p, t});
        }
    }

    std::vector<MultiPoly> rows;
    std::vector<std::vector<int>> row_src;
    std::vector<std::vector<Partition>> src_table;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        MultiPoly r = db.reduce(raw[i], W);
        MultiPoly zeta_free = r.filter([](const Monomial& m) { return !content(m).zeta; });
        if (zeta_free != r)
            throw InconsistencyError("ζ survives reduction in the row of " + raw_src[i].front().to_string() +
                                     " at weight " + std::to_string(W) + ": " + head(r - zeta_free));
        auto [even, odd] = parity_parts(zeta_free);
        for (MultiPoly* part : {&even, &odd}) {
            if (part->is_zero())
                continue;
            rows.push_back(std::move(*part));
            row_src.push_back({int(i)});
        }
    }
    res.rows = int(rows.size());

    LinearSolution sol = linear_solve(rows, unknown_order(false), true, row_src);
    RowEchelon basic(unknown_order(true));
    for (const MultiPoly& r : sol.residual)
        basic.insert(r);
    auto sources_of = [&](const std::vector<int>& idx) {
        std::vector<Partition> ps;
        for (int i : idx)
            ps.insert(ps.end(), raw_src[i].begin(), raw_src[i].end());
        return merge_sources(std::move(ps));
    };
    for (const SolvedRow& s : sol.solved) {
        Relation r = classify(basic.reduce(s.row), W);
        r.source = sources_of(s.sources);
        res.relations.push_back(std::move(r));
    }
    for (const EchelonRow& e : basic.rows()) {
        Relation r = classify(e.poly, W);
        std::vector<int> all(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
            all[i] = int(i);
        r.source = sources_of(all);
        res.relations.push_back(std::move(r));
    }
    return res;
}

std::vector<LayerResult> derive_through(int W_max, RelationDB& db, const TauModel& model, const LayerOptions& opt)
{
    std::vector<LayerResult> out;
    for (int W = db.complete_through() + 1; W <= W_max; ++W) {
        LayerResult res = derive_at_weight(W, db, model, opt);
        for (const Relation& r : res.relations)
            db.add(r);
        db.mark_complete(W);
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<Relation> cross_differentiate(const RelationDB& db)
{
    std::vector<const Relation*> four;
    for (const Relation& r : db.relations())
        if (is_rule(r) && unknown_class(*r.solved) == 0)
            four.push_back(&r);
    const CurveContext& c = db.curve();
    std::map<int, RowEchelon> seen;
    std::vector<Relation> out;
    for (std::size_t p = 0; p < four.size(); ++p)
        for (std::size_t q = p + 1; q < four.size(); ++q) {
            std::vector<int> J = four[p]->solved->factors()[0].first.key();
            std::vector<int> K = four[q]->solved->factors()[0].first.key();
            std::vector<int> M, a, b;
            std::set_intersection(J.begin(), J.end(), K.begin(), K.end(), std::back_inserter(M));
            if (M.size() != 3)
                continue;
            std::set_difference(J.begin(), J.end(), M.begin(), M.end(), std::back_inserter(a));
            std::set_difference(K.begin(), K.end(), M.begin(), M.end(), std::back_inserter(b));
            if (a.size() != 1 || b.size() != 1 || a[0] == b[0])
                continue;
            MultiPoly e = u_derivative(c, four[p]->expr, b[0]) - u_derivative(c, four[q]->expr, a[0]);
            int W = four[p]->weight + c.gap(b[0]);
            MultiPoly red = db.reduce(e, W);
            if (red.is_zero())
                continue;
            auto it = seen.try_emplace(W, unknown_order(true)).first;
            if (it->second.insert(red) == RowEchelon::Insert::Redundant)
                continue;
            Relation r = classify(red, W);
            r.source = merge_sources(
                [&] {
                    auto s = four[p]->source;
                    s.insert(s.end(), four[q]->source.begin(), four[q]->source.end());
                    return s;
                }());
            out.push_back(std::move(r));
        }
    std::stable_sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) { return x.weight < y.weight; });
    return out;
}

Relation kummer_quartic(const RelationDB& db)
{
    const CurveContext& c = db.curve();
    if (c.spec().family != Family::HyperellipticG2)
        throw ConfigError("kummer_quartic: genus-2 curves only");
    Symbol p111 = c.wp({1, 1, 1}), p112 = c.wp({1, 1, 2});
    auto need = [&](const Monomial& m) {
        const Relation* r = db.solved_for(m);
        if (!r || r->cls != RelationClass::QuadThreeIndex)
            throw ConfigError("kummer_quartic: no solved form for " + m.to_string());
        return r->rhs();
    };
    MultiPoly A = need(Monomial::of(p111, 2));
    MultiPoly B = need(Monomial::of(p112, 2));
    MultiPoly C = need(Monomial::from_factors({{p111, 1}, {p112, 1}}));
    MultiPoly q = db.normal_form(A * B - C * C);
    Monomial p12_4 = Monomial::of(c.wp({1, 2}), 4);
    Rational lead = q.coefficient(p12_4);
    if (lead == 0)
        throw InconsistencyError("kummer_quartic: no p12^4 term");
    if (!q.is_homogeneous(16))
        throw InconsistencyError("kummer_quartic: not homogeneous of weight 16");
    for (const auto& t : q.terms())
        if (unknown_class(t.first) != 3 || content(t.first).zeta)
            throw InconsistencyError("kummer_quartic: 3-index content survived: " + head(q));
    Relation r;
    r.expr = q * (Rational(1) / lead);
    r.weight = 16;
    r.cls = RelationClass::QuarticEven;
    for (const Relation* s : {db.solved_for(Monomial::of(p111, 2)), db.solved_for(Monomial::of(p112, 2)),
                              db.solved_for(Monomial::from_factors({{p111, 1}, {p112, 1}}))})
        r.source.insert(r.source.end(), s->source.begin(), s->source.end());
    r.source = merge_sources(std::move(r.source));
    return r;
}

MultiPoly canonical_form(const MultiPoly& r, const RelationDB& db)
{
    if (r.is_zero())
        return r;
    int w = r.weight();
    MultiPoly red = db.reduce(r, w);
    if (red.is_zero())
        return red;
    ColumnOrder order = unknown_order(true);
    const Monomial* lead = nullptr;
    for (const auto& t : red.terms())
        if (!lead || order.compare(t.first, *lead) > 0)
            lead = &t.first;
    return red * (Rational(1) / red.coefficient(*lead));
}

MultiPoly parse_relation(const CurveContext& c, std::string_view text)
{
    auto eq = text.find('=');
    if (eq == std::string_view::npos)
        return c.parse(text);
    if (text.find('=', eq + 1) != std::string_view::npos)
        throw ConfigError("relation has more than one '=': " + std::string(text));
    return c.parse(text.substr(0, eq)) - c.parse(text.substr(eq + 1));
}

} // namespace sigmatau
