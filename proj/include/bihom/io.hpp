#pragma once

// Canonical JSON documents for algebras and operators.
//
// Algebra document:
//   { "name": "...", "dim": n,
//     "left":  [ {"i": 1, "j": 2, "k": 1, "c": "1"}, ... ],   (1-based)
//     "right": [...], "middle": [...],
//     "alpha": [[...], ...], "beta": [[...], ...] }             (entry [j][i]: e_j in image of e_i)
// Unlisted products and a missing alpha/beta default to zero.
// Single-product document: the same layout with one "product" list.
// Operator document: a dim x dim array of scalar strings in the same layout.

#include "bihom/transforms.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace bihom {

BiHomTrialgebra parse_algebra(std::string_view document);
std::string serialize_algebra(const BiHomTrialgebra& a);
std::string serialize_single(const BiHomAlgebra& a, std::string_view name);

LinearMap parse_operator(std::string_view document, std::optional<std::size_t> expected_dim = std::nullopt);
std::string serialize_operator(const LinearMap& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bihom
