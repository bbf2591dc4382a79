#include "sigmatau/document.hpp"

#include "sigmatau/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace sigmatau {

using json = nlohmann::ordered_json;

namespace {

json rational_json(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j)
{
    mpz_class num, den;
    if (num.set_str(j.at("num").get<std::string>(), 10) != 0 || den.set_str(j.at("den").get<std::string>(), 10) != 0)
        throw ConfigError("malformed rational " + j.dump());
    if (den == 0)
        throw ConfigError("zero denominator " + j.dump());
    return make_rational(num, den);
}

std::vector<Symbol> collect_variables(const RelationDocument& doc)
{
    std::vector<Symbol> vars;
    std::set<const SymbolInfo*> seen;
    for (const auto* list : {&doc.relations, &doc.classical})
        for (const Relation& r : *list)
            for (const auto& [m, c] : r.expr.terms())
                for (const auto& [s, e] : m.factors())
                    if (s != doc.curve->grading() && seen.insert(s.info()).second)
                        vars.push_back(s);
    std::sort(vars.begin(), vars.end(), [](Symbol a, Symbol b) { return compare_precedence(a, b) > 0; });
    return vars;
}

std::vector<unsigned> exponents(const Monomial& m, const std::map<const SymbolInfo*, std::size_t>& index,
                                std::size_t n)
{
    std::vector<unsigned> e(n, 0);
    for (const auto& [s, k] : m.factors())
        e[index.at(s.info())] = k;
    return e;
}

Monomial monomial_from(const json& j, const std::vector<Symbol>& vars)
{
    auto e = j.get<std::vector<unsigned>>();
    if (e.size() != vars.size())
        throw ConfigError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                          std::to_string(vars.size()));
    std::vector<std::pair<Symbol, unsigned>> f;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i])
            f.emplace_back(vars[i], e[i]);
    return Monomial::from_factors(std::move(f));
}

json relation_json(const Relation& graded, const CurveContext& c, const std::map<const SymbolInfo*, std::size_t>& index, std::size_t n)
{
    const Relation r = ungraded(graded, c);
    json terms = json::array();
    for (const auto& [m, k] : r.expr.terms())
        terms.push_back(json{{"coefficient", rational_json(k)}, {"exponents", exponents(m, index, n)}});
    json source = json::array();
    for (const Partition& p : r.source)
        source.push_back(p.to_string());
    return json{{"weight", r.weight},
                {"class", to_string(r.cls)},
                {"text", r.to_string()},
                {"solved", r.solved ? json(exponents(*r.solved, index, n)) : json(nullptr)},
                {"source", source},
                {"terms", terms}};
}

Relation relation_from(const json& j, const CurveContext& c, const std::vector<Symbol>& vars)
{
    Relation r;
    r.weight = j.at("weight").get<int>();
    r.cls = relation_class_from_string(j.at("class").get<std::string>());
    for (const json& t : j.at("terms"))
        r.expr.add_term(monomial_from(t.at("exponents"), vars), rational_from_json(t.at("coefficient")));
    if (r.expr.is_zero())
        throw ConfigError("relation at weight " + std::to_string(r.weight) + " has no terms");
    r.expr = c.regrade(r.expr, r.weight);
    if (!r.expr.is_homogeneous(r.weight))
        throw ConfigError("relation '" + r.expr.to_string() + "' is not of weight " + std::to_string(r.weight));
    if (!j.at("solved").is_null()) {
        r.solved = monomial_from(j.at("solved"), vars);
        if (r.expr.coefficient(*r.solved) != 1)
            throw ConfigError("solved monomial of '" + r.expr.to_string() + "' does not have coefficient 1");
    }
    for (const json& s : j.at("source"))
        r.source.push_back(parse_partition(s.get<std::string>()));
    return r;
}

std::string latex_symbol(Symbol s)
{
    std::string idx;
    for (int k : s.key())
        idx += std::to_string(k);
    switch (s.kind()) {
    case SymbolKind::Wp:
        return "\\wp_{" + idx + "}";
    case SymbolKind::Zeta:
        return "\\zeta_{" + idx + "}";
    case SymbolKind::Param:
        if (s.name().rfind("mu", 0) == 0)
            return "\\mu_{" + idx + "}";
        return "\\alpha_{" + idx + "}";
    default:
        return s.name();
    }
}

std::string latex_monomial(const Monomial& m)
{
    auto f = m.factors();
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return compare_display(a.first, b.first) < 0; });
    std::string out;
    for (const auto& [s, e] : f) {
        out += latex_symbol(s);
        if (e > 1)
            out += "^{" + std::to_string(e) + "}";
    }
    return out;
}

std::string latex_coefficient(const Rational& a)
{
    if (is_integer(a))
        return a.get_num().get_str();
    return "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

} // namespace

Relation ungraded(const Relation& r, const CurveContext& c)
{
    Relation out = r;
    out.expr = c.ungraded(r.expr);
    return out;
}

Partition parse_partition(std::string_view s)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ConfigError("malformed partition '" + std::string(s) + "'");
    std::vector<int> parts;
    std::string_view body = s.substr(1, s.size() - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || v <= 0)
            throw ConfigError("malformed partition '" + std::string(s) + "'");
        parts.push_back(v);
        body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw ConfigError("partition parts must be weakly decreasing: '" + std::string(s) + "'");
    return Partition(std::move(parts));
}

bool same_relations(const std::vector<Relation>& a, const std::vector<Relation>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].expr.to_string() != b[i].expr.to_string() || a[i].weight != b[i].weight || a[i].cls != b[i].cls ||
            a[i].source != b[i].source || a[i].solved.has_value() != b[i].solved.has_value() ||
            (a[i].solved && a[i].solved->to_string() != b[i].solved->to_string()))
            return false;
    return true;
}

bool operator==(const RelationDocument& a, const RelationDocument& b)
{
    return a.curve->spec().fingerprint() == b.curve->spec().fingerprint() && a.engine_version == b.engine_version &&
           a.method == b.method && a.max_weight == b.max_weight && a.layers == b.layers &&
           same_relations(a.relations, b.relations) && same_relations(a.classical, b.classical);
}

std::string to_json(const RelationDocument& doc)
{
    const CurveSpec& spec = doc.curve->spec();
    json params = json::object();
    for (const CurveParam& p : spec.params)
        params[p.name] = p.value ? rational_json(*p.value) : json(nullptr);

    std::vector<Symbol> vars = collect_variables(doc);
    std::map<const SymbolInfo*, std::size_t> index;
    json jvars = json::array();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        index[vars[i].info()] = i;
        jvars.push_back(json{{"name", vars[i].name()}, {"weight", vars[i].weight()}});
    }

    json layers = json::array();
    for (const LayerSummary& l : doc.layers)
        layers.push_back(json{{"weight", l.weight},
                              {"diagrams", l.diagrams},
                              {"classes", l.classes},
                              {"rows", l.rows},
                              {"relations", l.relations}});
    json rels = json::array(), classical = json::array();
    for (const Relation& r : doc.relations)
        rels.push_back(relation_json(r, *doc.curve, index, vars.size()));
    for (const Relation& r : doc.classical)
        classical.push_back(relation_json(r, *doc.curve, index, vars.size()));

    json j{{"format", "sigmatau-relations"},
           {"engine_version", doc.engine_version},
           {"curve", json{{"family", spec.family_name()}, {"fingerprint", spec.fingerprint()}, {"parameters", params}}},
           {"method", doc.method},
           {"max_weight", doc.max_weight},
           {"variables", jvars},
           {"layers", layers},
           {"relations", rels},
           {"classical", classical}};
    return j.dump(2) + "\n";
}

RelationDocument from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("document is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("format", "") != "sigmatau-relations")
            throw ConfigError("not a sigmatau relation document");
        RelationDocument doc;
        const json& jc = j.at("curve");
        std::string spec_text = "family = " + jc.at("family").get<std::string>() + "\n";
        for (const auto& [name, v] : jc.at("parameters").items())
            if (!v.is_null())
                spec_text += name + " = " + to_string(rational_from_json(v)) + "\n";
        CurveSpec spec = parse_spec(spec_text);
        if (spec.fingerprint() != jc.at("fingerprint").get<std::string>())
            throw ConfigError("curve fingerprint '" + jc.at("fingerprint").get<std::string>() +
                              "' does not match its parameters ('" + spec.fingerprint() + "')");
        doc.curve = std::make_shared<const CurveContext>(spec);
        doc.engine_version = j.at("engine_version").get<std::string>();
        doc.method = j.at("method").get<std::string>();
        doc.max_weight = j.at("max_weight").get<int>();

        std::vector<Symbol> vars;
        for (const json& v : j.at("variables")) {
            std::string name = v.at("name").get<std::string>();
            MultiPoly p = doc.curve->resolve(name);
            if (p.size() != 1 || p.leading().second != 1 || p.leading().first.factors().size() != 1 ||
                p.leading().first.factors()[0].second != 1)
                throw ConfigError("variable '" + name + "' is not a free symbol of this curve");
            Symbol s = p.leading().first.factors()[0].first;
            if (s.weight() != v.at("weight").get<int>())
                throw ConfigError("variable '" + name + "' has weight " + std::to_string(s.weight()));
            vars.push_back(s);
        }
        for (const json& l : j.at("layers"))
            doc.layers.push_back(LayerSummary{l.at("weight").get<int>(), l.at("diagrams").get<int>(),
                                              l.at("classes").get<int>(), l.at("rows").get<int>(),
                                              l.at("relations").get<int>()});
        for (const json& r : j.at("relations"))
            doc.relations.push_back(relation_from(r, *doc.curve, vars));
        for (const json& r : j.at("classical"))
            doc.classical.push_back(relation_from(r, *doc.curve, vars));
        return doc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed document: ") + e.what());
    }
}

std::string render_text(const RelationDocument& doc)
{
    std::ostringstream out;
    out << "# curve " << doc.curve->spec().fingerprint() << "\n";
    out << "# method " << doc.method << ", max weight " << doc.max_weight << ", engine " << doc.engine_version
        << "\n";
    int w = -1;
    for (const Relation& r : doc.relations) {
        if (r.weight != w)
            out << "# weight " << (w = r.weight) << "\n";
        out << ungraded(r, *doc.curve).to_string() << "\n";
    }
    if (!doc.classical.empty()) {
        out << "# classical\n";
        for (const Relation& r : doc.classical)
            out << ungraded(r, *doc.curve).to_string() << "\n";
    }
    return out.str();
}

std::string latex(const MultiPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (c < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        if (m.is_one())
            out += latex_coefficient(a);
        else
            out += (a == 1 ? std::string() : latex_coefficient(a)) + latex_monomial(m);
        first = false;
    }
    return out;
}

std::string latex(const Relation& r)
{
    if (r.solved)
        return latex_monomial(*r.solved) + " &= " + latex(r.rhs());
    return latex(r.expr) + " &= 0";
}

std::string render_latex(const RelationDocument& doc)
{
    std::ostringstream out;
    out << "% curve " << doc.curve->spec().fingerprint() << "\n";
    out << "\\begin{align*}\n";
    std::vector<const Relation*> all;
    for (const Relation& r : doc.relations)
        all.push_back(&r);
    for (const Relation& r : doc.classical)
        all.push_back(&r);
    for (std::size_t i = 0; i < all.size(); ++i)
        out << latex(ungraded(*all[i], *doc.curve)) << (i + 1 < all.size() ? " \\\\\n" : "\n");
    out << "\\end{align*}\n";
    return out.str();
}

} // namespace sigmatau
