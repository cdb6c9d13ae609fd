#include "render.hpp"

#include "bihom/error.hpp"
#include "bihom/io.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace bihom;
using bihom::cli::ojson;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Options {
    std::string format = "text";
    bool strict = false;
    bool structured() const { return format == "structured"; }
};

void emit(const Options& o, const ojson& j, const std::string& t) {
    if (o.structured()) std::cout << j.dump(2) << "\n";
    else std::cout << t;
}

int verdict(const Options& o, bool clean) {
    return o.strict && !clean ? kCheckFailed : kOk;
}

BiHomTrialgebra load(const std::string& path) {
    return parse_algebra(read_file(path));
}

int cmd_verify(const Options& o, const std::string& file) {
    const auto a = load(file);
    const auto report = check_all(a);
    const bool coord = check_coordinate_form(a);
    ojson j{{"algebra", a.name}, {"dim", a.dim}, {"all_hold", report.all_hold()},
            {"coordinate_form_agrees", coord == report.all_hold()}, {"axioms", cli::to_json(report)}};
    emit(o, j, cli::text(a, report, coord));
    return verdict(o, report.all_hold());
}

int cmd_der(const Options& o, const std::string& file) {
    const auto a = load(file);
    const auto d = derivation_space(a);
    emit(o, cli::to_json(d), cli::text(d));
    return verdict(o, check_all(a).all_hold());
}

int cmd_cent(const Options& o, const std::string& file) {
    const auto a = load(file);
    try {
        const auto c = centroid_space(a);
        emit(o, cli::to_json(c), cli::text(c));
    } catch (const ObstructionTooLarge& e) {
        emit(o, ojson{{"algebra", a.name}, {"error", e.what()}}, "Cent(" + a.name + "): unresolved: " + e.what() + "\n");
        return verdict(o, false);
    }
    return verdict(o, check_all(a).all_hold());
}

int cmd_catalog_list(const Options& o) {
    ojson j = ojson::array();
    std::string t;
    for (const auto& e : catalog()) {
        ojson item{{"id", e.id}, {"dim", e.algebra.dim},
                   {"paper_der_dim", e.paper_der_dim() ? ojson(*e.paper_der_dim()) : ojson(nullptr)},
                   {"paper_cent_dim", e.paper_cent_dim() ? ojson(*e.paper_cent_dim()) : ojson(nullptr)}};
        ojson readings = ojson::array({"a"});
        for (const auto& r : e.alternates) readings.push_back(r.label);
        item["readings"] = std::move(readings);
        j.push_back(std::move(item));
        t += e.id + (e.alternates.empty() ? "" : "  (ambiguous listing; readings a, b)") + "\n";
    }
    emit(o, j, t);
    return kOk;
}

int cmd_catalog_get(const Options& o, const std::string& id, const std::string& reading, const std::string& out) {
    const CatalogEntry& e = catalog_get(id);
    const BiHomTrialgebra* a = &e.algebra;
    if (reading != "a") {
        a = nullptr;
        for (const auto& r : e.alternates)
            if (r.label == reading) a = &r.algebra;
        if (!a) throw UnknownId(id + " reading " + reading);
    }
    const std::string doc = serialize_algebra(*a);
    if (!out.empty()) {
        write_file(out, doc);
        return kOk;
    }
    if (o.structured()) {
        std::cout << doc;
        return kOk;
    }
    std::string t = e.id + " (dim " + std::to_string(a->dim) + ", zero-completion)\n";
    for (const auto& line : listing(*a)) t += "  " + line + "\n";
    for (const auto& note : e.ambiguity_notes) t += "  note: " + note + "\n";
    std::cout << t;
    return kOk;
}

int cmd_catalog_verify(const Options& o, const std::string& id, bool all) {
    if (all == !id.empty()) throw CLI::ValidationError("catalog verify", "give an id or --all");
    std::vector<EntryVerification> results;
    if (all) results = catalog_verify_all();
    else results.push_back(catalog_verify(id));
    ojson j = ojson::array();
    std::string t;
    std::size_t errata = 0;
    for (const auto& v : results) {
        j.push_back(cli::to_json(v));
        t += cli::text(v);
        errata += v.errata.size();
    }
    t += std::to_string(results.size()) + " entries, " + std::to_string(errata) + " errata records\n";
    emit(o, all ? j : j.front(), t);
    return verdict(o, errata == 0);
}

int cmd_iso(const Options& o, const std::string& fa, const std::string& fb, const std::string& fmap) {
    const auto a = load(fa);
    const auto b = load(fb);
    const auto psi = parse_operator(read_file(fmap), a.dim);
    const bool ok = verify_isomorphism(a, b, psi);
    emit(o, ojson{{"a", a.name}, {"b", b.name}, {"isomorphism", ok}},
         std::string(ok ? "isomorphism" : "not an isomorphism") + ": " + a.name + " -> " + b.name + "\n");
    return verdict(o, ok);
}

int write_construction(const Options& o, const BiHomTrialgebra& out, const std::string& path) {
    write_file(path, serialize_algebra(out));
    const auto report = check_all(out);
    ojson j{{"output", path}, {"algebra", out.name}, {"dim", out.dim}, {"all_hold", report.all_hold()},
            {"axioms", cli::to_json(report)}};
    emit(o, j, "wrote " + path + "\n" + cli::text(out, report, check_coordinate_form(out)));
    return verdict(o, report.all_hold());
}

int cmd_rb(const Options& o, const std::string& file, const std::string& fop, const std::string& weight) {
    const auto a = load(file);
    const RotaBaxterData rb{parse_operator(read_file(fop), a.dim), Scalar::parse(weight)};
    const auto report = rota_baxter_check(a, rb);
    ojson j{{"algebra", a.name}, {"weight", rb.weight.str()}, {"report", cli::to_json(report)}};
    emit(o, j, cli::text(report, "Rota-Baxter operator of weight " + rb.weight.str() + " on " + a.name));
    return verdict(o, report.holds());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on BiHom-associative trialgebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--strict", o.strict, "Exit 1 when a check fails");

    std::function<int()> run;
    std::string file, file_b, map_file, out_file, id, reading = "a", op_file, weight;
    bool all = false;

    auto* verify = app.add_subcommand("verify", "Axiom and multiplicativity report");
    verify->add_option("file", file)->required();
    verify->callback([&] { run = [&] { return cmd_verify(o, file); }; });

    auto* der = app.add_subcommand("der", "Derivation space");
    der->add_option("file", file)->required();
    der->callback([&] { run = [&] { return cmd_der(o, file); }; });

    auto* cent = app.add_subcommand("cent", "Centroid: linear space, obstruction, dimension");
    cent->add_option("file", file)->required();
    cent->callback([&] { run = [&] { return cmd_cent(o, file); }; });

    auto* cat = app.add_subcommand("catalog", "Classified algebras");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List entry ids")->callback([&] { run = [&] { return cmd_catalog_list(o); }; });
    auto* get = cat->add_subcommand("get", "Print an entry");
    get->add_option("id", id)->required();
    get->add_option("--reading", reading, "Reading of an ambiguous listing");
    get->add_option("-o,--output", out_file, "Write the canonical document here");
    get->callback([&] { run = [&] { return cmd_catalog_get(o, id, reading, out_file); }; });
    auto* cverify = cat->add_subcommand("verify", "Verify entries against the published tables");
    cverify->add_option("id", id);
    cverify->add_flag("--all", all);
    cverify->callback([&] { run = [&] { return cmd_catalog_verify(o, id, all); }; });

    auto* iso = app.add_subcommand("iso", "Check that a map is an isomorphism");
    iso->add_option("a", file)->required();
    iso->add_option("b", file_b)->required();
    iso->add_option("--map", map_file)->required();
    iso->callback([&] { run = [&] { return cmd_iso(o, file, file_b, map_file); }; });

    auto* cons = app.add_subcommand("construct", "Build a new algebra");
    cons->require_subcommand(1);
    auto* dsum = cons->add_subcommand("direct-sum", "A ⊕ B");
    dsum->add_option("a", file)->required();
    dsum->add_option("b", file_b)->required();
    dsum->add_option("-o,--output", out_file)->required();
    dsum->callback([&] { run = [&] { return write_construction(o, direct_sum(load(file), load(file_b)), out_file); }; });
    auto* tsum = cons->add_subcommand("total-sum", "Single product ⊣ + ⊢ + ⊥");
    tsum->add_option("a", file)->required();
    tsum->add_option("-o,--output", out_file)->required();
    tsum->callback([&] {
        run = [&] {
            const auto a = load(file);
            const BiHomAlgebra s = total_sum(a);
            write_file(out_file, serialize_single(s, a.name + " total sum"));
            const auto report = check_bihom_associativity(s);
            emit(o, ojson{{"output", out_file}, {"bihom_associative", cli::to_json(report)}},
                 "wrote " + out_file + "\n" + cli::text(report, "BiHom-associativity"));
            return verdict(o, report.holds());
        };
    });
    auto* trans = cons->add_subcommand("transport", "Transport of structure along an invertible map");
    trans->add_option("a", file)->required();
    trans->add_option("--map", map_file)->required();
    trans->add_option("-o,--output", out_file)->required();
    trans->callback([&] {
        run = [&] {
            const auto a = load(file);
            return write_construction(o, transport(a, parse_operator(read_file(map_file), a.dim)), out_file);
        };
    });

    auto* rb = app.add_subcommand("rb", "Rota-Baxter operators");
    rb->require_subcommand(1);
    auto* rbv = rb->add_subcommand("verify", "Check the weighted identities");
    rbv->add_option("a", file)->required();
    rbv->add_option("--op", op_file)->required();
    rbv->add_option("--weight", weight)->required();
    rbv->callback([&] { run = [&] { return cmd_rb(o, file, op_file, weight); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        return run();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
