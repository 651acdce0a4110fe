#pragma once

#include <set>
#include <string>
#include <vector>

#include "morphic/word.hpp"

inline morphic::Word W(const std::string& s) { return morphic::Word::parse(s); }

inline std::set<std::string> strs(const std::set<morphic::Word>& s) {
  std::set<std::string> out;
  for (const auto& w : s) out.insert(w.str());
  return out;
}

inline std::set<std::string> strs(const std::vector<morphic::Word>& s) {
  std::set<std::string> out;
  for (const auto& w : s) out.insert(w.str());
  return out;
}

#ifndef MORPHIC_MANIFEST_DIR
#define MORPHIC_MANIFEST_DIR "manifests"
#endif
inline std::string manifest_path(const std::string& rel) { return std::string(MORPHIC_MANIFEST_DIR) + "/" + rel; }
