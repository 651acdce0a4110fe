#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphic/word.hpp"

namespace morphic {

/// Named morphisms from the characterization results, with hatted letters
/// encoded as 2^ = 3 and 0^ = 4.
const std::vector<std::pair<std::string, std::string>>& morphism_catalog();

/// Looks a name up in the catalog.
std::optional<Morphism> catalog_morphism(std::string_view name);

/// A catalog name or a morphism in slash format.
Morphism resolve_morphism(std::string_view text);

}  // namespace morphic
