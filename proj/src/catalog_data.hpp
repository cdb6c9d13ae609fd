#pragma once

#include <string_view>
#include <vector>

namespace bihom::detail {

struct EmbeddedDocument {
    std::string_view file;
    std::string_view text;
};

const std::vector<EmbeddedDocument>& embedded_catalog();

}  // namespace bihom::detail
