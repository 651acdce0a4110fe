#include "morphic/catalog.hpp"

namespace morphic {

const std::vector<std::pair<std::string, std::string>>& morphism_catalog() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"fib", "01/0"},
      {"b3", "012/02/1"},
      {"p", "01/21/0"},
      {"b5", "01/23/4/21/0"},
      {"pd", "01/00"},
      {"g4", "00010011000111011/000100111011/00111"},
      {"g5", "0000100000111000011000111/000010000011000111/0000011"},
      {"g12", "001/01/1"},
      {"M2", "02/1/0/12/"},
      {"h12", "0011/01/001/011/"},
      {"c", "0010111100/1101000011//1101001100/0010110011"},
      {"k5", "013431/0131/02"},
      {"c5", "0/1/2/2/0"},
      {"k4", "1232/12/10"},
      {"k3", "122/12/10"},
  };
  return table;
}

std::optional<Morphism> catalog_morphism(std::string_view name) {
  for (const auto& [key, text] : morphism_catalog())
    if (key == name) return Morphism::parse(text);
  return std::nullopt;
}

Morphism resolve_morphism(std::string_view text) {
  if (auto m = catalog_morphism(text)) return *m;
  return Morphism::parse(text);
}

}  // namespace morphic
