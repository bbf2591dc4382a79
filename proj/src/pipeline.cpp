#include "sigmatau/pipeline.hpp"

#include "sigmatau/classical.hpp"
#include "sigmatau/errors.hpp"
#include "sigmatau/reference.hpp"
#include "sigmatau/version.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sigmatau {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kWeight16 = 16;

// Error of the same kind with the layer weight in front.
[[noreturn]] void rethrow_at(int W)
{
    std::string pre = "weight " + std::to_string(W) + ": ";
    try {
        throw;
    } catch (const ConfigError& e) {
        throw ConfigError(pre + e.what());
    } catch (const TruncationError& e) {
        throw TruncationError(pre + e.what());
    } catch (const InconsistencyError& e) {
        throw InconsistencyError(pre + e.what());
    }
}

// Injective: alphanumerics and '-' kept, everything else as _xx.
std::string sanitize(const std::string& s)
{
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : s) {
        if (std::isalnum(ch) || ch == '-') {
            out += char(ch);
        } else {
            out += '_';
            out += hex[ch >> 4];
            out += hex[ch & 15];
        }
    }
    return out;
}

json poly_grid(const std::vector<std::vector<MultiPoly>>& g)
{
    json out = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const MultiPoly& p : row)
            r.push_back(p.to_string());
        out.push_back(r);
    }
    return out;
}

std::vector<std::vector<MultiPoly>> grid_from(const json& j, const CurveContext& c)
{
    std::vector<std::vector<MultiPoly>> out;
    for (const json& row : j) {
        out.emplace_back();
        for (const json& p : row)
            out.back().push_back(c.parse(p.get<std::string>()));
    }
    return out;
}

std::unique_ptr<TauModel> load_model(const fs::path& file, const CurveContextPtr& c, int max_weight)
{
    std::ifstream in(file);
    if (!in)
        return nullptr;
    try {
        json j = json::parse(in);
        if (j.at("engine_version") != kEngineVersion || j.at("fingerprint") != c->spec().fingerprint())
            return nullptr;
        WindingData R{grid_from(j.at("winding"), *c)};
        OmegaAlgTable om;
        om.w = grid_from(j.at("omega"), *c);
        om.N = int(om.w.size());
        return std::make_unique<TauModel>(c, std::move(R), std::move(om), max_weight);
    } catch (const std::exception&) {
        return nullptr;
    }
}

std::vector<Relation> klein_relations(const CurveContext& c, int max_weight)
{
    std::vector<Relation> out;
    for (Relation& r : jacobi_inversion_extract(c, klein_expand(c, 1)).relations)
        if (r.weight <= max_weight)
            out.push_back(std::move(r));
    return out;
}

bool implied(const RelationDB& db, const MultiPoly& e, int W)
{
    return db.reduce(e, W + 1).is_zero();
}

RelationDB database_of(const RelationDocument& doc)
{
    RelationDB db(doc.curve);
    for (const Relation& r : doc.relations.empty() ? doc.classical : doc.relations)
        db.add(r);
    return db;
}

RelationDB reference_database(const CurveContextPtr& c)
{
    RelationDB db(c);
    for (const ReferenceEntry& e : reference_table(c->spec().family))
        if (!e.alias)
            db.add(classify(parse_relation(*c, e.text), e.weight));
    return db;
}

} // namespace

void validate(const RunConfig& cfg, const CurveContext& c)
{
    if (cfg.max_weight < 4)
        throw ConfigError("max weight must be at least 4 (no rank-2 diagram is lighter), got " +
                          std::to_string(cfg.max_weight));
    if (cfg.method != "plucker" && cfg.method != "classical" && cfg.method != "both")
        throw ConfigError("unknown method '" + cfg.method + "' (plucker, classical or both)");
    if (cfg.method != "plucker" && c.spec().family != Family::HyperellipticG2)
        throw ConfigError("the classical method needs a genus-2 curve");
    if (cfg.method != "classical" && cfg.max_weight >= kWeight16 && !cfg.enable_weight16)
        throw ConfigError("layers of weight 16 and above take minutes; pass --enable-weight16 to run them");
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

CurveContextPtr load_curve(const fs::path& p)
{
    try {
        return std::make_shared<const CurveContext>(parse_spec(read_file(p)));
    } catch (const ConfigError& e) {
        throw ConfigError(p.string() + ": " + e.what());
    }
}

void write_atomic(const fs::path& p, const std::string& content)
{
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ConfigError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw ConfigError("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) {
        fs::remove(tmp);
        throw ConfigError("cannot replace " + p.string() + ": " + ec.message());
    }
}

fs::path default_cache_dir()
{
    if (const char* d = std::getenv("SIGMATAU_CACHE"); d && *d)
        return d;
    if (const char* h = std::getenv("HOME"); h && *h)
        return fs::path(h) / ".cache" / "sigmatau";
    return fs::temp_directory_path() / "sigmatau";
}

std::string cache_file_name(const CurveContext& c, int max_time_index)
{
    return "tau-" + sanitize(kEngineVersion) + "-" + sanitize(c.spec().fingerprint()) + "-K" +
           std::to_string(max_time_index) + ".json";
}

std::unique_ptr<TauModel> cached_model(CurveContextPtr c, int max_weight, const std::optional<fs::path>& dir, bool* hit)
{
    if (hit)
        *hit = false;
    if (!dir)
        return std::make_unique<TauModel>(c, max_weight);
    fs::path file = *dir / cache_file_name(*c, max_weight + 1);
    if (auto m = load_model(file, c, max_weight)) {
        if (hit)
            *hit = true;
        return m;
    }
    auto m = std::make_unique<TauModel>(c, max_weight);
    json j{{"engine_version", kEngineVersion},
           {"fingerprint", c->spec().fingerprint()},
           {"max_time_index", m->max_time_index()},
           {"winding", poly_grid(m->winding().R)},
           {"omega", poly_grid(m->omega().w)}};
    // The cache is an optimisation: an unwritable directory is not an error.
    try {
        fs::create_directories(*dir);
        write_atomic(file, j.dump(1) + "\n");
    } catch (const std::exception&) {
    }
    return m;
}

RelationDocument derive_document(CurveContextPtr c, const RunConfig& cfg, std::ostream* log)
{
    validate(cfg, *c);
    RelationDocument doc;
    doc.curve = c;
    doc.engine_version = kEngineVersion;
    doc.method = cfg.method;
    doc.max_weight = cfg.max_weight;

    RelationDB db(c);
    if (cfg.method != "classical") {
        std::optional<fs::path> dir;
        if (cfg.use_cache)
            dir = cfg.cache_dir ? *cfg.cache_dir : default_cache_dir();
        bool hit = false;
        std::unique_ptr<TauModel> model = cached_model(c, cfg.max_weight, dir, &hit);
        if (log)
            *log << "tau model through weight " << cfg.max_weight << (hit ? " (cached)" : "") << "\n";
        LayerOptions opt;
        opt.allow_rank3 = cfg.allow_rank3;
        for (int W = 4; W <= cfg.max_weight; ++W) {
            LayerResult res;
            try {
                res = derive_at_weight(W, db, *model, opt);
                for (const Relation& r : res.relations)
                    db.add(r);
                db.mark_complete(W);
            } catch (const Error&) {
                rethrow_at(W);
            }
            doc.layers.push_back(LayerSummary{W, res.diagrams, res.classes, res.rows, int(res.relations.size())});
            if (log)
                *log << "weight " << W << ": " << res.diagrams << " diagrams, " << res.classes << " classes, "
                     << res.relations.size() << " relations\n";
            for (Relation& r : res.relations)
                doc.relations.push_back(std::move(r));
        }
        if (c->spec().family == Family::HyperellipticG2 && cfg.max_weight >= 10 && cfg.max_weight < kWeight16)
            doc.relations.push_back(kummer_quartic(db));
    }
    if (cfg.method != "plucker") {
        doc.classical = klein_relations(*c, cfg.max_weight);
        if (cfg.method == "both")
            for (const Relation& r : doc.classical)
                if (!implied(db, r.expr, r.weight))
                    throw InconsistencyError("classical relation '" + ungraded(r, *c).to_string() +
                                             "' does not follow from the Plucker relations");
    }
    return doc;
}

bool VerifyReport::ok() const
{
    for (const VerifyLine& l : lines)
        if (!l.pass)
            return false;
    return unmatched.empty();
}

VerifyReport verify_document(const RelationDocument& doc, const CurveContext* expected)
{
    const CurveContext& c = *doc.curve;
    if (expected && expected->spec().fingerprint() != c.spec().fingerprint())
        throw ConfigError("document is about '" + c.spec().fingerprint() + "', not '" +
                          expected->spec().fingerprint() + "'");
    const Family fam = c.spec().family;
    VerifyReport rep;
    RelationDB db = database_of(doc);
    RelationDB ref = reference_database(doc.curve);

    // Plücker documents cover every layer through max_weight; classical
    // ones only what the Klein expansion yields.
    const std::vector<Relation>& primary = doc.relations.empty() ? doc.classical : doc.relations;
    int top = 0;
    for (const Relation& r : primary)
        if (r.cls != RelationClass::QuarticEven)
            top = std::max(top, r.weight);
    const int covered = doc.relations.empty() ? top : doc.max_weight;

    for (const ReferenceEntry& e : reference_table(fam)) {
        if (e.weight > covered)
            continue;
        MultiPoly want = parse_relation(c, e.text);
        VerifyLine line{implied(db, want, e.weight), e.label, e.weight, ""};
        if (!line.pass && !doc.relations.empty())
            line.detail = "not implied by the document; residual " + c.ungraded(db.reduce(want, e.weight + 1)).to_string();
        if (!line.pass && doc.relations.empty()) {
            // Classical documents hold a subset; only check what they claim.
            bool claimed = false;
            for (const Relation& r : doc.classical)
                claimed = claimed || (r.solved && classify(want, e.weight).solved == r.solved);
            if (!claimed)
                continue;
            line.detail = "differs from the document's relation for the same unknown";
        }
        if (!e.note.empty())
            line.detail += (line.detail.empty() ? "" : "; ") + e.note;
        rep.lines.push_back(std::move(line));
    }

    const int complete = std::min(reference_complete_through(fam), covered);
    for (const Relation& r : primary)
        if (r.weight <= complete && !implied(ref, r.expr, r.weight))
            rep.unmatched.push_back(ungraded(r, c).to_string());

    if (!doc.relations.empty())
        for (const Relation& r : doc.classical)
            rep.lines.push_back(VerifyLine{implied(db, r.expr, r.weight), "classical " + r.solved->to_string(),
                                           r.weight, "Klein expansion against the Plucker relations"});

    for (const Relation& r : doc.relations)
        if (r.cls == RelationClass::QuarticEven && fam == Family::HyperellipticG2) {
            VerifyLine line{false, "Kummer quartic", r.weight, ""};
            try {
                Relation k = kummer_quartic(db);
                line.pass = k.expr == r.expr;
                if (!line.pass)
                    line.detail = "expected " + ungraded(k, c).to_string();
            } catch (const Error& e) {
                line.detail = e.what();
            }
            rep.lines.push_back(std::move(line));
        }

    if (fam == Family::CyclicTrigonal34 && doc.max_weight >= 12 && !doc.relations.empty()) {
        MultiPoly res = db.reduce(parse_relation(c, trigonal_quartic_text()), 13);
        rep.notes.push_back("trigonal quartic residual: " + c.ungraded(res).to_string());
    }
    return rep;
}

} // namespace sigmatau
