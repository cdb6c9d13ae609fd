#include "bihom/catalog.hpp"

#include "bihom/error.hpp"
#include "bihom/io.hpp"
#include "bihom/transforms.hpp"
#include "catalog_data.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bihom {

namespace {

using Positions = std::vector<std::pair<std::size_t, std::size_t>>;

struct Published {
    const char* id;
    std::optional<PaperRow> der;
    std::optional<PaperRow> cent;
    std::vector<std::string> notes;
};

PaperRow row(std::size_t dim, Positions entries) {
    return {dim, std::move(entries)};
}

// Derivation and centroid rows as printed; 1-based positions of the symbols
// in the displayed matrices. Two-dimensional centroids are stated to be zero.
std::vector<Published> published() {
    const PaperRow zero = row(0, {});
    const PaperRow d21 = row(1, {{2, 1}});
    const PaperRow d21_33 = row(2, {{2, 1}, {3, 3}});
    const PaperRow d22_33 = row(2, {{2, 2}, {3, 3}});
    const PaperRow d11_22 = row(2, {{1, 1}, {2, 2}});
    const PaperRow c21 = row(1, {{2, 1}});
    const PaperRow c33 = row(1, {{3, 3}});
    const PaperRow c22 = row(1, {{2, 2}});
    const PaperRow c31 = row(1, {{3, 1}});
    return {
        {"BTas_2^1", d21, zero, {}},
        {"BTas_2^2", d21, zero, {}},
        {"BTas_2^3", std::nullopt, zero, {}},
        {"BTas_2^4", std::nullopt, zero, {}},
        {"BTas_2^5", std::nullopt, zero, {}},
        {"BTas_2^6", d21, zero, {}},
        {"BTas_2^7", std::nullopt, zero,
         {"e_1⊣e_2 is listed twice (= e_1 and = e_1+e_2); reading a takes the second line as e_2⊣e_2 = e_1+e_2, "
          "following the ⊢ and ⊥ listings; reading b keeps e_1⊣e_2 = e_1+e_2 only"}},
        {"BTas_3^1", d21_33, c21, {}},
        {"BTas_3^2", d21, c21, {}},
        {"BTas_3^3", d22_33, c33, {}},
        {"BTas_3^4", row(2, {{2, 1}, {2, 3}}), c31, {}},
        {"BTas_3^5", d21, c21, {}},
        {"BTas_3^6", d21_33, c21, {}},
        {"BTas_3^7", d22_33, c33, {}},
        {"BTas_3^8", d22_33, c33, {}},
        {"BTas_3^9", d22_33, c33, {}},
        {"BTas_3^10", row(2, {{1, 1}, {3, 3}}), c33, {}},
        {"BTas_3^11", d11_22, c22, {}},
        {"BTas_3^12", d11_22, c22, {}},
        {"BTas_3^13", d11_22, c22, {}},
        {"BTas_3^14", row(3, {{1, 1}, {2, 2}, {2, 3}}), std::nullopt, {}},
        {"BTas_3^15", row(2, {{1, 1}, {2, 3}}), row(1, {{1, 1}}), {}},
        {"BTas_3^16", std::nullopt, c31, {}},
        {"BTas_3^17", std::nullopt, std::nullopt, {}},
        {"BTas_3^18", std::nullopt, c31, {}},
        {"BTas_3^19", row(2, {{2, 1}, {2, 3}}), c31,
         {"the centroid row shows its symbol at position (3,1) but names it c_13; the position is used"}},
        {"BTas_3^20", std::nullopt, c31, {}},
        {"BTas_3^21", std::nullopt, c31, {}},
        {"BTas_3^22", std::nullopt, c31, {}},
        {"BTas_3^23", std::nullopt, c31, {}},
        {"BTas_3^24", std::nullopt, c31,
         {"e_2⊢e_3 is listed twice (= e_3 and = e_1); reading a keeps e_2⊢e_3 = e_3, reading b keeps e_2⊢e_3 = e_1"}},
    };
}

std::string file_stem(std::string_view id) {
    std::string s(id);
    std::replace(s.begin(), s.end(), '^', '_');
    return s;
}

std::vector<CatalogEntry> load() {
    std::map<std::string, BiHomTrialgebra, std::less<>> docs;
    for (const auto& d : detail::embedded_catalog()) docs.emplace(std::string(d.file), parse_algebra(d.text));
    std::vector<CatalogEntry> out;
    for (auto& p : published()) {
        const std::string stem = file_stem(p.id);
        CatalogEntry e;
        e.id = p.id;
        e.algebra = docs.at(stem + ".json");
        e.paper_der = std::move(p.der);
        e.paper_cent = std::move(p.cent);
        e.ambiguity_notes = std::move(p.notes);
        if (auto it = docs.find(stem + ".b.json"); it != docs.end()) e.alternates.push_back({"b", it->second});
        out.push_back(std::move(e));
    }
    return out;
}

std::string vector_str(std::span<const Scalar> v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const std::string c = v[k].str();
        if (c == "1") out << (first ? "" : "+");
        else if (c == "-1") out << "-";
        else if (!first && c[0] != '-') out << "+" << (v[k].is_real() ? c : "(" + c + ")");
        else out << (v[k].is_real() ? c : "(" + c + ")");
        out << "e_" << k + 1;
        first = false;
    }
    return first ? "0" : out.str();
}

std::string witness_str(std::size_t i, std::size_t j, std::size_t k, std::size_t arity, const Vector& l, const Vector& r) {
    std::ostringstream out;
    out << "(e_" << i + 1;
    if (arity > 1) out << ", e_" << j + 1;
    if (arity > 2) out << ", e_" << k + 1;
    out << "): " << vector_str(l) << " vs " << vector_str(r);
    return out.str();
}

std::string violation_str(const Violation& v) {
    std::ostringstream out;
    out << v.condition << " at (";
    for (std::size_t t = 0; t < v.basis.size(); ++t) out << (t ? ", " : "") << "e_" << v.basis[t] + 1;
    out << "): " << vector_str(v.lhs) << " vs " << vector_str(v.rhs);
    return out.str();
}

std::string basis_str(const std::vector<LinearMap>& basis) {
    if (basis.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? ", " : "") + map_label(basis[i]);
    return s + "}";
}

std::string axiom_summary(const AxiomReport& r) {
    const auto failing = r.failing();
    if (failing.empty()) return "all axioms hold";
    std::string s = "fails";
    for (std::size_t i = 0; i < failing.size(); ++i) s += (i ? ", " : " ") + std::string(axiom_name(failing[i]));
    return s;
}

// One listed line of an algebra.
struct Line {
    bool twist = false;
    Role role = Role::Left;  // product lines
    bool beta = false;       // twist lines
    std::size_t i = 0;
    std::size_t j = 0;
    Vector image;
};

std::string line_str(const Line& l) {
    if (l.twist) return std::string(l.beta ? "β" : "α") + "(e_" + std::to_string(l.i + 1) + ") = " + vector_str(l.image);
    return "e_" + std::to_string(l.i + 1) + std::string(role_symbol(l.role)) + "e_" + std::to_string(l.j + 1) + " = " +
           vector_str(l.image);
}

std::vector<Line> lines_of(const BiHomTrialgebra& a) {
    std::vector<Line> out;
    for (Role r : kRoles)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                auto p = a.product(r).product(i, j);
                if (!is_zero(p)) out.push_back({false, r, false, i, j, Vector(p.begin(), p.end())});
            }
    for (int b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < a.dim; ++i) {
            Vector img = (b ? a.beta : a.alpha).image(i);
            if (!is_zero(img)) out.push_back({true, Role::Left, b == 1, i, 0, std::move(img)});
        }
    return out;
}

bool occupied(const BiHomTrialgebra& a, const Line& l) {
    if (l.twist) return !is_zero((l.beta ? a.beta : a.alpha).image(l.i));
    return !is_zero(a.product(l.role).product(l.i, l.j));
}

void put(BiHomTrialgebra& a, const Line& l, bool clear) {
    const Vector v = clear ? zero_vector(a.dim) : l.image;
    if (l.twist) {
        Matrix m = (l.beta ? a.beta : a.alpha).matrix();
        for (std::size_t k = 0; k < a.dim; ++k) m(k, l.i) = v[k];
        (l.beta ? a.beta : a.alpha) = LinearMap(std::move(m));
    } else {
        a.product(l.role).set_product(l.i, l.j, v);
    }
}

}  // namespace

std::optional<std::size_t> CatalogEntry::paper_der_dim() const {
    if (!paper_der) return std::nullopt;
    return paper_der->dim;
}

std::optional<std::size_t> CatalogEntry::paper_cent_dim() const {
    if (!paper_cent) return std::nullopt;
    return paper_cent->dim;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = load();
    return entries;
}

std::vector<std::string> catalog_list() {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
}

const CatalogEntry& catalog_get(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownId(std::string(id));
}

std::vector<std::string> listing(const BiHomTrialgebra& a) {
    std::vector<std::string> out;
    for (const auto& l : lines_of(a)) out.push_back(line_str(l));
    return out;
}

std::vector<std::string> single_edit_fixes(const BiHomTrialgebra& a) {
    const std::size_t n = a.dim;
    std::vector<std::string> out;
    auto try_edit = [&](const Line& from, const Line& to) {
        BiHomTrialgebra b = a;
        put(b, from, true);
        if (occupied(b, to)) return;
        put(b, to, false);
        if (!check_all(b).all_hold()) return;
        std::string s = line_str(from) + " → " + line_str(to);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    };
    for (const auto& l : lines_of(a)) {
        if (l.twist) {
            Line t = l;
            t.beta = !l.beta;
            try_edit(l, t);
        } else {
            for (Role r : kRoles) {
                if (r == l.role) continue;
                Line t = l;
                t.role = r;
                try_edit(l, t);
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (v != l.i) {
                Line t = l;
                t.i = v;
                try_edit(l, t);
            }
            if (!l.twist && v != l.j) {
                Line t = l;
                t.j = v;
                try_edit(l, t);
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (l.image[k].is_zero()) continue;
            for (std::size_t k2 = 0; k2 < n; ++k2) {
                if (!l.image[k2].is_zero()) continue;
                Line t = l;
                std::swap(t.image[k], t.image[k2]);
                try_edit(l, t);
            }
        }
    }
    return out;
}

EntryVerification catalog_verify(std::string_view id) {
    const CatalogEntry& e = catalog_get(id);
    const BiHomTrialgebra& a = e.algebra;
    EntryVerification v;
    v.id = e.id;
    v.dim = a.dim;
    v.axioms = check_all(a);
    v.coordinate_form_holds = check_coordinate_form(a);
    if (!e.alternates.empty()) {
        v.readings.push_back({"a", v.axioms, v.coordinate_form_holds});
        for (const auto& r : e.alternates) v.readings.push_back({r.label, check_all(r.algebra), check_coordinate_form(r.algebra)});
    }
    v.der = derivation_table_row(a, e.paper_der);
    try {
        v.cent = centroid_table_row(a, e.paper_cent);
    } catch (const ObstructionTooLarge& ex) {
        v.cent_error = ex.what();
    }
    auto add = [&](std::string check, std::string expected, std::string computed, std::string witness) {
        v.errata.push_back({e.id, std::move(check), std::move(expected), std::move(computed), std::move(witness)});
    };

    if (!v.paths_agree())
        add("coordinate-form", "agrees with basis evaluation", v.coordinate_form_holds ? "holds" : "fails",
            axiom_summary(v.axioms));
    for (const auto& res : v.axioms.results) {
        if (res.holds) continue;
        const auto& w = res.witnesses.front();
        add(std::string(axiom_name(res.id)), std::string(axiom_statement(res.id)),
            "fails on " + std::to_string(res.witnesses.size()) + " basis tuples",
            witness_str(w.i, w.j, w.k, w.arity, w.lhs, w.rhs));
    }
    if (!v.axioms.all_hold()) {
        v.conjectured_fixes = single_edit_fixes(a);
        if (v.conjectured_fixes.empty())
            add("conjectured-correction", "all axioms hold", "no single edit of the listing restores the axioms", "");
        for (const auto& fix : v.conjectured_fixes)
            add("conjectured-correction", "all axioms hold", "all axioms hold after this edit (conjectural)", fix);
    }
    for (const auto& note : e.ambiguity_notes) {
        std::string computed;
        for (const auto& r : v.readings)
            computed += (computed.empty() ? "" : "; ") + ("reading " + r.label + ": " + axiom_summary(r.axioms));
        add("ambiguity", note, computed.empty() ? "listing used as displayed" : computed, "");
    }

    const DerivationRow& d = v.der;
    if (d.status == TableStatus::Mismatch)
        add("der-dim", std::to_string(*d.paper_dim), std::to_string(d.computed_dim), "recomputed basis " + basis_str(d.basis));
    for (const auto& c : d.claims) {
        if (c.literal_holds) continue;
        const std::string sym = "d_" + std::to_string(c.row) + std::to_string(c.col);
        const auto rep = is_derivation(a, literal_unit(a.dim, c.row, c.col));
        add("der-basis", sym + " as e_" + std::to_string(c.col) + " ↦ e_" + std::to_string(c.row) + " is a derivation",
            std::string("fails; transposed e_") + std::to_string(c.row) + " ↦ e_" + std::to_string(c.col) +
                (c.transposed_holds ? " holds" : " also fails"),
            violation_str(rep.violations.front()));
    }
    if (v.cent) {
        const CentroidRow& c = *v.cent;
        if (c.status == TableStatus::Mismatch)
            add("cent-dim", std::to_string(*c.paper_dim), std::to_string(c.computed_dim),
                "stage-1 dim " + std::to_string(c.stage1_dim) +
                    (c.identically_zero ? ", obstruction identically zero" : ", obstruction nonzero") +
                    "; largest linear subspace " + basis_str(c.basis));
        for (const auto& cl : c.claims) {
            if (cl.literal_holds) continue;
            const std::string sym = "c_" + std::to_string(cl.row) + std::to_string(cl.col);
            const auto rep = is_centroid_element(a, literal_unit(a.dim, cl.row, cl.col));
            add("cent-basis",
                sym + " as e_" + std::to_string(cl.col) + " ↦ e_" + std::to_string(cl.row) + " is a centroid element",
                std::string("fails; transposed e_") + std::to_string(cl.row) + " ↦ e_" + std::to_string(cl.col) +
                    (cl.transposed_holds ? " holds" : " also fails"),
                violation_str(rep.violations.front()));
        }
    } else if (e.paper_cent) {
        add("cent-dim", std::to_string(e.paper_cent->dim), "unresolved", v.cent_error);
    }
    return v;
}

std::vector<EntryVerification> catalog_verify_all() {
    std::vector<EntryVerification> out;
    for (const auto& e : catalog()) out.push_back(catalog_verify(e.id));
    return out;
}

Fingerprint fingerprint(const BiHomTrialgebra& a) {
    validate(a);
    const std::size_t n = a.dim;
    Fingerprint f;
    f.axiom_profile = check_all(a).profile();
    f.der_dim = derivation_space(a).dim();
    f.cent_linear_dim = centroid_linear_space(a).size();
    std::vector<Vector> all;
    for (std::size_t r = 0; r < 3; ++r) {
        std::vector<Vector> prods;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto p = a.product(kRoles[r]).product(i, j);
                prods.emplace_back(p.begin(), p.end());
            }
        f.product_ranks[r] = rank(Matrix::from_rows(n, prods));
        all.insert(all.end(), prods.begin(), prods.end());
    }
    f.twist_ranks = {rank(a.alpha.matrix()), rank(a.beta.matrix())};
    f.squared_dim = rank(Matrix::from_rows(n, all));
    return f;
}

std::optional<std::string> distinguish(const Fingerprint& a, const Fingerprint& b) {
    if (a.der_dim != b.der_dim) return "der_dim";
    if (a.cent_linear_dim != b.cent_linear_dim) return "cent_linear_dim";
    if (a.product_ranks != b.product_ranks) return "product_ranks";
    if (a.twist_ranks != b.twist_ranks) return "twist_ranks";
    if (a.squared_dim != b.squared_dim) return "squared_dim";
    if (a.axiom_profile != b.axiom_profile) return "axiom_profile";
    return std::nullopt;
}

std::optional<std::string> distinguish(std::string_view a, std::string_view b) {
    const auto& ea = catalog_get(a);
    const auto& eb = catalog_get(b);
    if (ea.algebra.dim != eb.algebra.dim) return "dim";
    return distinguish(fingerprint(ea.algebra), fingerprint(eb.algebra));
}

bool verify_isomorphism(const BiHomTrialgebra& a, const BiHomTrialgebra& b, const LinearMap& psi) {
    if (a.dim != b.dim || psi.domain_dim() != a.dim || psi.codomain_dim() != b.dim)
        throw DimensionMismatch("isomorphism needs equal dimensions and a square map of that size");
    if (rank(psi.matrix()) != a.dim) return false;
    return is_morphism(psi, a, b).holds();
}

}  // namespace bihom
