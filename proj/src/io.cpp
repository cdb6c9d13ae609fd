#include "bihom/io.hpp"

#include "bihom/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace bihom {

using json = nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        throw ParseError(msg.substr(msg.find(' ') == std::string::npos ? 0 : msg.find(' ') + 1),
                         line_of(text, e.byte ? e.byte - 1 : 0));
    }
}

Scalar scalar_field(const json& v, const std::string& field) {
    if (!v.is_string()) throw ParseError("expected a scalar string", 0, field);
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), 0, field);
    }
}

std::size_t index_field(const json& rec, const char* key, std::size_t dim, const std::string& field) {
    auto it = rec.find(key);
    if (it == rec.end()) throw ParseError(std::string("missing index '") + key + "'", 0, field);
    if (!it->is_number_integer()) throw ParseError(std::string("index '") + key + "' must be an integer", 0, field);
    auto v = it->get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw DimensionError(field + ": index " + key + "=" + std::to_string(v) + " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

Matrix square_field(const json& v, std::size_t dim, const std::string& field) {
    if (!v.is_array() || v.size() != dim)
        throw ParseError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " array", 0, field);
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = v[r];
        std::string rf = field + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != dim)
            throw ParseError("expected a row of " + std::to_string(dim) + " scalars", 0, rf);
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_field(row[c], rf + "[" + std::to_string(c) + "]");
    }
    return m;
}

void parse_products(const json& doc, Role role, BiHomTrialgebra& a) {
    std::string key(role_name(role));
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array()) throw ParseError("expected an array of product records", 0, key);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    MulTensor& t = a.product(role);
    for (std::size_t n = 0; n < it->size(); ++n) {
        const json& rec = (*it)[n];
        std::string field = key + "[" + std::to_string(n) + "]";
        if (!rec.is_object()) throw ParseError("expected an object {i, j, k, c}", 0, field);
        auto i = index_field(rec, "i", a.dim, field);
        auto j = index_field(rec, "j", a.dim, field);
        auto k = index_field(rec, "k", a.dim, field);
        if (!seen.emplace(i, j, k).second)
            throw ParseError("duplicate product (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                 std::to_string(k + 1) + ")",
                             0, field);
        auto c = rec.find("c");
        if (c == rec.end()) throw ParseError("missing coefficient 'c'", 0, field);
        t.at(i, j, k) = scalar_field(*c, field + ".c");
    }
}

std::string quoted(const Scalar& s) {
    return '"' + s.str() + '"';
}

void write_matrix(std::ostringstream& os, const Matrix& m, const std::string& indent) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "," : "") << "\n" << indent << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << quoted(m(r, c));
        os << "]";
    }
    os << "\n" << indent << "]";
}

}  // namespace

BiHomTrialgebra parse_algebra(std::string_view document) {
    json doc = parse_json(document);
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object", 1);
    auto dim_it = doc.find("dim");
    if (dim_it == doc.end()) throw ParseError("missing field", 0, "dim");
    if (!dim_it->is_number_integer() || dim_it->get<long long>() < 1)
        throw ParseError("must be a positive integer", 0, "dim");
    const auto n = static_cast<std::size_t>(dim_it->get<long long>());

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("must be a string", 0, "name");
        name = it->get<std::string>();
    }
    for (const auto& [key, value] : doc.items()) {
        static const std::set<std::string> known{"name", "dim", "left", "right", "middle", "alpha", "beta"};
        if (!known.count(key)) throw ParseError("unknown field", 0, key);
    }

    BiHomTrialgebra a = BiHomTrialgebra::zero(n, name);
    for (Role r : kRoles) parse_products(doc, r, a);
    if (auto it = doc.find("alpha"); it != doc.end()) a.alpha = LinearMap(square_field(*it, n, "alpha"));
    if (auto it = doc.find("beta"); it != doc.end()) a.beta = LinearMap(square_field(*it, n, "beta"));
    return a;
}

namespace {

void write_records(std::ostringstream& os, std::string_view key, const MulTensor& t) {
    os << ",\n  \"" << key << "\": [";
    bool first = true;
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (c.is_zero()) continue;
                os << (first ? "\n" : ",\n") << "    {\"i\": " << i + 1 << ", \"j\": " << j + 1
                   << ", \"k\": " << k + 1 << ", \"c\": " << quoted(c) << "}";
                first = false;
            }
    os << (first ? "]" : "\n  ]");
}

void write_twists(std::ostringstream& os, const LinearMap& alpha, const LinearMap& beta) {
    os << ",\n  \"alpha\": ";
    write_matrix(os, alpha.matrix(), "  ");
    os << ",\n  \"beta\": ";
    write_matrix(os, beta.matrix(), "  ");
    os << "\n}\n";
}

}  // namespace

std::string serialize_algebra(const BiHomTrialgebra& a) {
    validate(a);
    std::ostringstream os;
    os << "{\n  \"name\": " << json(a.name).dump() << ",\n  \"dim\": " << a.dim;
    for (Role role : kRoles) write_records(os, role_name(role), a.product(role));
    write_twists(os, a.alpha, a.beta);
    return os.str();
}

std::string serialize_single(const BiHomAlgebra& a, std::string_view name) {
    std::ostringstream os;
    os << "{\n  \"name\": " << json(name).dump() << ",\n  \"dim\": " << a.dim;
    write_records(os, "product", a.mu);
    write_twists(os, a.alpha, a.beta);
    return os.str();
}

LinearMap parse_operator(std::string_view document, std::optional<std::size_t> expected_dim) {
    json doc = parse_json(document);
    if (!doc.is_array() || doc.empty()) throw ParseError("operator document must be a non-empty square array", 1);
    const std::size_t n = doc.size();
    if (expected_dim && *expected_dim != n)
        throw DimensionMismatch("operator is " + std::to_string(n) + "-dimensional, expected " +
                                std::to_string(*expected_dim));
    return LinearMap(square_field(doc, n, "operator"));
}

std::string serialize_operator(const LinearMap& m) {
    std::ostringstream os;
    write_matrix(os, m.matrix(), "");
    os << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
}

}  // namespace bihom
