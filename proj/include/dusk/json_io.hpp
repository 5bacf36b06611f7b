#pragma once

#include "dusk/duskin.hpp"
#include "dusk/fincat.hpp"
#include "dusk/matset.hpp"
#include "dusk/paths.hpp"
#include "dusk/theta2.hpp"

#include <json.hpp>

namespace dusk {

// JSON encodings; the shapes are documented in schemas/json-formats.md.

nlohmann::json encode(const FinCategory& c);
nlohmann::json encode(const FunctorData& f);
nlohmann::json encode(const MatSimplex& s);
nlohmann::json encode(const TupleSimplex& t);
nlohmann::json encode(const TwoCategory& c);
nlohmann::json encode(const DuskinSimplex& s);
nlohmann::json encode(const Shuffle& s);
nlohmann::json encode(const Triangulation& t);
nlohmann::json encode(const LabeledPath& p);

FinCategory decode_fincategory(const nlohmann::json& j);
MatSimplex decode_matsimplex(const nlohmann::json& j);

}  // namespace dusk
