#include "render.hpp"

#include <sstream>

namespace bihom::cli {

namespace {

ojson basis_json(const std::vector<std::size_t>& basis) {
    ojson out = ojson::array();
    for (auto b : basis) out.push_back(b + 1);
    return out;
}

ojson maps_json(const std::vector<LinearMap>& maps) {
    ojson out = ojson::array();
    for (const auto& m : maps) out.push_back({{"label", map_label(m)}, {"matrix", to_json(m)}});
    return out;
}

std::string vec_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string labels(const std::vector<LinearMap>& maps) {
    if (maps.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < maps.size(); ++i) s += (i ? ", " : "") + map_label(maps[i]);
    return s + "}";
}

std::string opt_dim(const std::optional<std::size_t>& d) {
    return d ? std::to_string(*d) : "-";
}

}  // namespace

ojson to_json(const Vector& v) {
    ojson out = ojson::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

ojson to_json(const LinearMap& m) {
    ojson out = ojson::array();
    const Matrix& x = m.matrix();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

ojson to_json(const AxiomReport& r) {
    ojson out = ojson::object();
    for (const auto& res : r.results) {
        ojson item{{"holds", res.holds}, {"statement", std::string(axiom_statement(res.id))}};
        if (!res.holds) {
            const auto& w = res.witnesses.front();
            std::vector<std::size_t> basis{w.i, w.j, w.k};
            basis.resize(w.arity);
            item["failures"] = res.witnesses.size();
            item["witness"] = {{"basis", basis_json(basis)}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
        }
        out[std::string(axiom_name(res.id))] = std::move(item);
    }
    return out;
}

ojson to_json(const CheckReport& r) {
    ojson v = ojson::array();
    for (const auto& x : r.violations)
        v.push_back({{"condition", x.condition}, {"basis", basis_json(x.basis)}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}});
    return {{"holds", r.holds()}, {"violations", std::move(v)}};
}

ojson to_json(const DerivationSpace& d) {
    return {{"algebra", d.algebra}, {"dim", d.dim()}, {"basis", maps_json(d.basis)}};
}

ojson to_json(const CentroidSpace& c) {
    ojson polys = ojson::array();
    for (const auto& p : c.obstruction) {
        ojson coeffs = ojson::object();
        for (const auto& [mono, s] : p.coefficients()) coeffs[mono] = s.str();
        polys.push_back(std::move(coeffs));
    }
    ojson out{{"algebra", c.algebra},
              {"linear_dim", c.parameters()},
              {"linear_basis", maps_json(c.linear_basis)},
              {"obstruction", std::move(polys)},
              {"identically_zero", c.identically_zero},
              {"dim", c.dim()},
              {"basis", maps_json(c.max_subspace)}};
    if (c.description) {
        ojson comps = ojson::array();
        for (const auto& comp : *c.description) {
            ojson item{{"kind", std::string(kind_name(comp.kind))}};
            if (!comp.point.empty()) item["point"] = to_json(comp.point);
            if (!comp.direction.empty()) item["direction"] = to_json(comp.direction);
            if (!comp.equations.empty()) {
                ojson eqs = ojson::array();
                for (const auto& e : comp.equations) eqs.push_back(e.str());
                item["equations"] = std::move(eqs);
            }
            comps.push_back(std::move(item));
        }
        out["solution_set"] = std::move(comps);
    }
    return out;
}

ojson to_json(const ErrataRecord& e) {
    return {{"entry", e.entry}, {"check", e.check}, {"expected", e.expected}, {"computed", e.computed}, {"witness", e.witness}};
}

ojson to_json(const EntryVerification& v) {
    ojson readings = ojson::array();
    for (const auto& r : v.readings)
        readings.push_back({{"reading", r.label}, {"all_hold", r.axioms.all_hold()}, {"coordinate_form", r.coordinate_form_holds}});
    ojson der{{"computed_dim", v.der.computed_dim},
              {"paper_dim", v.der.paper_dim ? ojson(*v.der.paper_dim) : ojson(nullptr)},
              {"status", std::string(status_name(v.der.status))},
              {"basis", maps_json(v.der.basis)}};
    ojson cent;
    if (v.cent) {
        cent = {{"computed_dim", v.cent->computed_dim},
                {"paper_dim", v.cent->paper_dim ? ojson(*v.cent->paper_dim) : ojson(nullptr)},
                {"status", std::string(status_name(v.cent->status))},
                {"linear_dim", v.cent->stage1_dim},
                {"identically_zero", v.cent->identically_zero},
                {"basis", maps_json(v.cent->basis)}};
    } else {
        cent = {{"error", v.cent_error}};
    }
    ojson errata = ojson::array();
    for (const auto& e : v.errata) errata.push_back(to_json(e));
    return {{"id", v.id},
            {"dim", v.dim},
            {"all_hold", v.axioms.all_hold()},
            {"axioms", to_json(v.axioms)},
            {"coordinate_form", v.coordinate_form_holds},
            {"paths_agree", v.paths_agree()},
            {"readings", std::move(readings)},
            {"der", std::move(der)},
            {"cent", std::move(cent)},
            {"conjectured_fixes", v.conjectured_fixes},
            {"errata", std::move(errata)}};
}

std::string matrix_text(const LinearMap& m, const std::string& indent) {
    std::ostringstream out;
    const Matrix& x = m.matrix();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        out << indent << "[";
        for (std::size_t c = 0; c < x.cols(); ++c) out << (c ? " " : "") << x(r, c);
        out << "]\n";
    }
    return out.str();
}

std::string text(const BiHomTrialgebra& a, const AxiomReport& r, bool coordinate_form_holds) {
    std::ostringstream out;
    out << a.name << " (dim " << a.dim << ")\n";
    for (const auto& res : r.results) {
        out << "  " << axiom_name(res.id) << std::string(5 - axiom_name(res.id).size(), ' ') << (res.holds ? "pass  " : "FAIL  ")
            << axiom_statement(res.id);
        if (!res.holds) {
            const auto& w = res.witnesses.front();
            out << "  [" << res.witnesses.size() << " failing, e.g. (e_" << w.i + 1;
            if (w.arity > 1) out << ",e_" << w.j + 1;
            if (w.arity > 2) out << ",e_" << w.k + 1;
            out << "): " << vec_text(w.lhs) << " vs " << vec_text(w.rhs) << "]";
        }
        out << "\n";
    }
    out << "coordinate form: " << (coordinate_form_holds == r.all_hold() ? "agrees" : "DISAGREES") << "\n";
    const auto failing = r.failing();
    out << "result: " << (failing.empty() ? "all axioms hold" : std::to_string(failing.size()) + " axioms fail") << "\n";
    return out.str();
}

std::string text(const CheckReport& r, const std::string& title) {
    std::ostringstream out;
    out << title << ": " << (r.holds() ? "holds" : "fails") << "\n";
    for (const auto& v : r.violations) {
        out << "  " << v.condition << " at (";
        for (std::size_t i = 0; i < v.basis.size(); ++i) out << (i ? "," : "") << "e_" << v.basis[i] + 1;
        out << "): " << vec_text(v.lhs) << " vs " << vec_text(v.rhs) << "\n";
    }
    return out.str();
}

std::string text(const DerivationSpace& d) {
    std::ostringstream out;
    out << "Der(" << d.algebra << "): dim " << d.dim() << "\n";
    for (const auto& m : d.basis) out << "  " << map_label(m) << "\n" << matrix_text(m, "    ");
    return out.str();
}

std::string text(const CentroidSpace& c) {
    std::ostringstream out;
    out << "Cent(" << c.algebra << "): dim " << c.dim() << "\n";
    out << "  linear space: dim " << c.parameters() << " " << labels(c.linear_basis) << "\n";
    if (c.identically_zero) {
        out << "  obstruction: identically zero\n";
    } else {
        out << "  obstruction (ψ = Σ tₐBₐ):\n";
        for (const auto& p : c.obstruction) out << "    " << p.str() << " = 0\n";
    }
    out << "  largest linear subspace: " << labels(c.max_subspace) << "\n";
    for (const auto& m : c.max_subspace) out << matrix_text(m, "    ");
    if (c.description) {
        out << "  solution set:\n";
        for (const auto& comp : *c.description) {
            out << "    " << kind_name(comp.kind);
            if (!comp.point.empty()) out << " through " << vec_text(comp.point);
            if (!comp.direction.empty()) out << " along " << vec_text(comp.direction);
            for (const auto& e : comp.equations) out << " [" << e.str() << " = 0]";
            out << "\n";
        }
    }
    return out.str();
}

std::string text(const EntryVerification& v) {
    std::ostringstream out;
    const auto failing = v.axioms.failing();
    out << v.id << ": ";
    if (failing.empty()) {
        out << "axioms pass";
    } else {
        out << "axioms fail (";
        for (std::size_t i = 0; i < failing.size(); ++i) out << (i ? " " : "") << axiom_name(failing[i]);
        out << ")";
    }
    out << ", coordinate form " << (v.paths_agree() ? "agrees" : "DISAGREES");
    out << ", der " << v.der.computed_dim << " (paper " << opt_dim(v.der.paper_dim) << ", " << status_name(v.der.status) << ")";
    if (v.cent)
        out << ", cent " << v.cent->computed_dim << " (paper " << opt_dim(v.cent->paper_dim) << ", "
            << status_name(v.cent->status) << ")";
    else
        out << ", cent unresolved";
    out << "\n";
    for (const auto& r : v.readings)
        out << "  reading " << r.label << ": " << (r.axioms.all_hold() ? "axioms pass" : "axioms fail") << "\n";
    for (const auto& e : v.errata) {
        out << "  erratum [" << e.check << "] expected: " << e.expected << "; computed: " << e.computed;
        if (!e.witness.empty()) out << "; witness: " << e.witness;
        out << "\n";
    }
    return out.str();
}

}  // namespace bihom::cli
