#include "sigmatau/errors.hpp"
#include "sigmatau/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace sigmatau;

namespace {

enum Exit { Ok = 0, Mismatch = 1, BadInput = 2, Failure = 3 };

std::string render(const RelationDocument& doc, const std::string& format)
{
    if (format == "json")
        return to_json(doc);
    if (format == "text")
        return render_text(doc);
    if (format == "latex")
        return render_latex(doc);
    throw ConfigError("unknown format '" + format + "' (json, text or latex)");
}

void emit(const std::string& out, const std::string& content)
{
    if (out.empty() || out == "-")
        std::cout << content;
    else
        write_atomic(out, content);
}

int show(const RelationDocument& doc)
{
    std::cout << "curve     " << doc.curve->spec().fingerprint() << "\n"
              << "method    " << doc.method << "\n"
              << "weight    " << doc.max_weight << "\n"
              << "engine    " << doc.engine_version << "\n";
    if (!doc.layers.empty()) {
        std::cout << "\nweight  diagrams  classes  rows  relations\n";
        for (const LayerSummary& l : doc.layers)
            std::printf("%6d  %8d  %7d  %4d  %9d\n", l.weight, l.diagrams, l.classes, l.rows, l.relations);
    }
    for (const auto* list : {&doc.relations, &doc.classical}) {
        if (list->empty())
            continue;
        std::cout << (list == &doc.relations ? "\nrelations\n" : "\nclassical\n");
        for (const Relation& r : *list) {
            std::cout << "  [" << r.weight << ", " << to_string(r.cls) << "] " << ungraded(r, *doc.curve).to_string();
            if (!r.source.empty()) {
                std::cout << "  from";
                for (const Partition& p : r.source)
                    std::cout << " " << p.to_string();
            }
            std::cout << "\n";
        }
    }
    return Ok;
}

int verify(const RelationDocument& doc, const std::string& curve)
{
    CurveContextPtr expected = curve.empty() ? nullptr : load_curve(curve);
    VerifyReport rep = verify_document(doc, expected.get());
    for (const VerifyLine& l : rep.lines) {
        std::cout << (l.pass ? "PASS " : "FAIL ") << l.label << " (weight " << l.weight << ")";
        if (!l.detail.empty())
            std::cout << ": " << l.detail;
        std::cout << "\n";
    }
    for (const std::string& u : rep.unmatched)
        std::cout << "FAIL unmatched document relation: " << u << "\n";
    for (const std::string& n : rep.notes)
        std::cout << "NOTE " << n << "\n";
    std::cout << (rep.ok() ? "verified\n" : "mismatch\n");
    return rep.ok() ? Ok : Mismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sigma-function relations from tau-function Pluecker identities"};
    app.require_subcommand(1);

    std::string curve, out, format = "json", method = "plucker", cache_dir, doc_path;
    RunConfig cfg;
    bool no_cache = false, quiet = false;

    auto* derive = app.add_subcommand("derive", "derive relations up to a weight");
    derive->add_option("--curve", curve, "curve spec file")->required();
    derive->add_option("--max-weight", cfg.max_weight, "highest layer to derive")->capture_default_str();
    derive->add_option("--method", method, "plucker, classical or both")->capture_default_str();
    derive->add_option("--out", out, "output file (stdout when omitted)");
    derive->add_option("--format", format, "json, text or latex")->capture_default_str();
    derive->add_flag("--enable-weight16", cfg.enable_weight16, "allow layers of weight 16 and above");
    derive->add_flag("--enable-rank3", cfg.allow_rank3, "also use rank-3 diagrams");
    derive->add_option("--cache-dir", cache_dir, "cache directory for winding and omega tables");
    derive->add_flag("--no-cache", no_cache, "do not read or write the cache");
    derive->add_flag("-q,--quiet", quiet, "no progress on stderr");

    auto* ver = app.add_subcommand("verify", "check a document against the published relations");
    ver->add_option("document", doc_path, "relation document (JSON)")->required();
    ver->add_option("--curve", curve, "curve the document must be about");

    auto* sh = app.add_subcommand("show", "summarise a document");
    sh->add_option("document", doc_path, "relation document (JSON)")->required();

    auto* ex = app.add_subcommand("export", "convert a document");
    ex->add_option("document", doc_path, "relation document (JSON)")->required();
    ex->add_option("--format", format, "json, text or latex")->capture_default_str();
    ex->add_option("--out", out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        if (*derive) {
            cfg.method = method;
            cfg.use_cache = !no_cache;
            if (!cache_dir.empty())
                cfg.cache_dir = cache_dir;
            RelationDocument doc = derive_document(load_curve(curve), cfg, quiet ? nullptr : &std::cerr);
            emit(out, render(doc, format));
            return Ok;
        }
        RelationDocument doc = from_json(read_file(doc_path));
        if (*ver)
            return verify(doc, curve);
        if (*sh)
            return show(doc);
        emit(out, render(doc, format));
        return Ok;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    }
}
