#pragma once

// Structure-constant model of a BiHom-associative trialgebra and the
// axiom checker.

#include "bihom/matrix.hpp"

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bihom {

enum class Role { Left, Right, Middle };

inline constexpr std::array<Role, 3> kRoles{Role::Left, Role::Right, Role::Middle};

std::string_view role_name(Role r);    // "left", "right", "middle"
std::string_view role_symbol(Role r);  // "⊣", "⊢", "⊥"

// e_i • e_j = sum_k c(i, j, k) e_k, 0-based.
class MulTensor {
public:
    MulTensor() = default;
    MulTensor(std::size_t dim, Role role);

    std::size_t dim() const { return dim_; }
    Role role() const { return role_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    std::span<const Scalar> product(std::size_t i, std::size_t j) const { return {c_.data() + (i * dim_ + j) * dim_, dim_}; }
    void set_product(std::size_t i, std::size_t j, std::span<const Scalar> v);

    // Bilinear extension of the basis products.
    Vector apply(std::span<const Scalar> x, std::span<const Scalar> y) const;

    bool is_zero() const { return bihom::is_zero(c_); }
    std::size_t nonzero_products() const;

    friend bool operator==(const MulTensor&, const MulTensor&) = default;

private:
    std::size_t dim_ = 0;
    Role role_ = Role::Left;
    std::vector<Scalar> c_;
};

// Column i holds the image of e_i: map(e_i) = sum_j m(j, i) e_j.
// Rectangular maps (codomain rows x domain cols) are allowed for morphisms.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(Matrix m) : m_(std::move(m)) {}

    static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
    static LinearMap zero(std::size_t n) { return LinearMap(Matrix(n, n)); }
    static LinearMap zero(std::size_t codomain, std::size_t domain) { return LinearMap(Matrix(codomain, domain)); }
    // E_{qp}: e_p -> e_q, all other basis vectors -> 0 (0-based).
    static LinearMap unit(std::size_t n, std::size_t q, std::size_t p);
    static LinearMap from_flat(std::size_t n, std::span<const Scalar> flat);

    std::size_t dim() const { return m_.cols(); }
    std::size_t domain_dim() const { return m_.cols(); }
    std::size_t codomain_dim() const { return m_.rows(); }
    bool square() const { return m_.square(); }

    const Matrix& matrix() const { return m_; }
    Vector image(std::size_t i) const { return m_.column(i); }
    Vector operator()(std::span<const Scalar> v) const { return m_.apply(v); }
    // Row-major flattening (m(0,0), m(0,1), ...) used for solution spaces.
    const std::vector<Scalar>& flat() const { return m_.entries(); }

    friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ + b.m_); }
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ - b.m_); }
    friend LinearMap operator*(const Scalar& s, const LinearMap& a) { return LinearMap(s * a.m_); }
    friend bool operator==(const LinearMap&, const LinearMap&) = default;

    bool is_zero() const { return m_.is_zero(); }

private:
    Matrix m_;
};

struct BiHomTrialgebra {
    std::string name;
    std::size_t dim = 0;
    MulTensor left;
    MulTensor right;
    MulTensor middle;
    LinearMap alpha;
    LinearMap beta;

    static BiHomTrialgebra zero(std::size_t n, std::string name = {});

    const MulTensor& product(Role r) const;
    MulTensor& product(Role r);

    friend bool operator==(const BiHomTrialgebra&, const BiHomTrialgebra&) = default;
};

// Throws DimensionMismatch when the components disagree on the dimension.
void validate(const BiHomTrialgebra& a);

Vector evaluate(const BiHomTrialgebra& a, Role role, std::span<const Scalar> x, std::span<const Scalar> y);

// ---------------------------------------------------------------------------
// Axioms

enum class AxiomId {
    C0,
    A1, A2a, A2b, A3, A4a, A4b, A5, A6, A7, A8, A9,
    M1, M2, M3, M4, M5, M6,
};

inline constexpr std::size_t kAxiomCount = 18;
std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);
// Human-readable identity, e.g. "(x⊣y)⊣β(z) = α(x)⊣(y⊣z)".
std::string_view axiom_statement(AxiomId id);
const std::vector<AxiomId>& structural_axioms();      // C0, A1..A9
const std::vector<AxiomId>& multiplicativity_axioms();  // M1..M6

// Indices are 0-based; `k` is unused by the pairwise axioms (C0 uses only i).
struct AxiomWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t arity = 3;
    Vector lhs;
    Vector rhs;

    friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomResult {
    AxiomId id;
    bool holds = true;
    std::vector<AxiomWitness> witnesses;
};

struct AxiomReport {
    std::vector<AxiomResult> results;

    bool all_hold() const;
    const AxiomResult* find(AxiomId id) const;
    bool holds(AxiomId id) const;
    std::vector<AxiomId> failing() const;
    // One bit per axiom, in AxiomId order; only axioms present in the report are set when they hold.
    std::uint32_t profile() const;
    void merge(const AxiomReport& other);
};

// C0 and A1..A9 on all basis triples.
AxiomReport check_axioms(const BiHomTrialgebra& a);
// M1..M6: α and β are endomorphisms of each product, on all basis pairs.
AxiomReport check_multiplicativity(const BiHomTrialgebra& a);
AxiomReport check_all(const BiHomTrialgebra& a);

// Independent evaluation of the same identities written as index sums over
// the structure constants and the twist matrices. Agrees with
// check_all(a).all_hold() on every input.
bool check_coordinate_form(const BiHomTrialgebra& a);

}  // namespace bihom
