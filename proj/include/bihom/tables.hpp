#pragma once

// Comparison of computed spaces against published table rows.

#include "bihom/algebra.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bihom {

enum class TableStatus { Match, Mismatch, PaperSilent };
std::string_view status_name(TableStatus s);  // "match", "mismatch", "paper-silent"

// A table row: the claimed dimension and the 1-based (row, column) positions of
// the free symbols in the displayed matrix.
struct PaperRow {
    std::size_t dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> entries;
};

// A displayed symbol x_{rc} read two ways: literally as the matrix entry
// (image of e_c has coefficient on e_r), and transposed (e_r -> e_c).
struct ClaimedEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    bool literal_holds = false;
    bool transposed_holds = false;
};

inline LinearMap literal_unit(std::size_t n, std::size_t row, std::size_t col) {
    return LinearMap::unit(n, row - 1, col - 1);
}
inline LinearMap transposed_unit(std::size_t n, std::size_t row, std::size_t col) {
    return LinearMap::unit(n, col - 1, row - 1);
}

// "E12+E33" style label of a map in 1-based matrix positions.
std::string map_label(const LinearMap& m);

}  // namespace bihom
