#pragma once

// Text and structured (JSON) renderings of reports for the command line.

#include "bihom/catalog.hpp"
#include "bihom/transforms.hpp"

#include "json.hpp"

#include <string>

namespace bihom::cli {

using ojson = nlohmann::ordered_json;

ojson to_json(const Vector& v);
ojson to_json(const LinearMap& m);
ojson to_json(const AxiomReport& r);
ojson to_json(const CheckReport& r);
ojson to_json(const DerivationSpace& d);
ojson to_json(const CentroidSpace& c);
ojson to_json(const EntryVerification& v);
ojson to_json(const ErrataRecord& e);

std::string text(const BiHomTrialgebra& a, const AxiomReport& r, bool coordinate_form_holds);
std::string text(const CheckReport& r, const std::string& title);
std::string text(const DerivationSpace& d);
std::string text(const CentroidSpace& c);
std::string text(const EntryVerification& v);
std::string matrix_text(const LinearMap& m, const std::string& indent);

}  // namespace bihom::cli
