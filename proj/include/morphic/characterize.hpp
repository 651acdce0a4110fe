#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morphic/constraints.hpp"
#include "morphic/formula.hpp"
#include "morphic/graph.hpp"
#include "morphic/search.hpp"
#include "morphic/word.hpp"

namespace morphic {

/// True iff v is a factor of some bi-infinite concatenation of pieces.
/// Pieces must be non-empty.
bool code_factor_membership(const Word& v, const std::vector<Word>& pieces);

/// Image-wise equality. Throws DomainError if the source alphabets differ.
bool morphisms_equal(const Morphism& a, const Morphism& b);

/// Every length-k factor of w contains u. Requires |u| <= k <= |w|.
bool every_window_contains(const Word& w, std::size_t k, const Word& u);

struct Localizer {
  std::size_t window = 0;
  Word required;
  Formula reduced;
  std::optional<std::size_t> avoid_length;  // prefix length for the pattern check
};

struct OccurrenceExpectation {
  Formula formula;
  std::size_t cap = 0;
  std::optional<std::size_t> prefix_length;
  std::set<Word> images;  // expected fragment images, one per assignment
};

struct MorphismIdentity {
  std::string outer, inner, expected;  // catalog names or slash format
};

struct EraseIdentity {
  std::string morphism;
  LetterSet letters;
  std::string expected;
};

struct Refutation {
  std::string constraints_path;
  bool extended = false;
};

struct LongWordExpectation {
  std::string constraints_path;
  std::size_t length = 0;
};

/// One characterization result packaged as data.
struct TheoremManifest {
  std::string name;
  std::string path;  // file the manifest came from; relative paths resolve against its directory
  std::optional<std::string> constraints_path;
  std::optional<std::string> target_outer;
  std::optional<std::string> target_inner;
  std::size_t check_length = 20;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> prefix;

  std::optional<std::set<Word>> expect_squares;
  std::optional<std::set<Word>> expect_overlaps;
  bool overlaps_derived = false;
  std::vector<Localizer> localizers;
  enum class PieceSource { none, target_outer, target_inner, list };
  PieceSource piece_source = PieceSource::none;
  std::vector<Word> pieces;
  std::vector<OccurrenceExpectation> occurrences;
  std::vector<MorphismIdentity> identities;
  std::vector<EraseIdentity> erasures;
  std::optional<std::string> expect_walk;
  std::vector<std::pair<Formula, std::size_t>> expect_avoids;
  std::vector<Word> absent_factors;
  std::optional<ExponentCap> exponent_free;
  std::vector<std::string> expect_good;  // further constraint files the prefix satisfies
  std::vector<Refutation> refutations;
  std::vector<LongWordExpectation> long_words;

  bool has_target() const { return target_inner.has_value(); }
  std::string resolve(const std::string& relative) const;
};

/// Line-oriented manifest format; `path` is used to resolve relative file names.
TheoremManifest parse_manifest(std::string_view text, const std::string& path = {});
TheoremManifest load_manifest(const std::string& path);

struct VerifyOptions {
  std::optional<std::size_t> check_length;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> prefix;
  bool extended = false;  // run checks marked extended
  SearchOptions search;
};

struct CheckResult {
  std::string label;
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::vector<std::string> lines;
};

struct CharacterizationReport {
  std::string name;
  std::size_t check_length = 0, horizon = 0, prefix = 0;
  std::vector<CheckResult> checks;
  std::vector<Word> only_in_language;  // S^L \ Fact_L(target)
  std::vector<Word> only_in_target;    // Fact_L(target) \ S^L
  std::vector<std::string> notes;

  bool passed() const;
  /// Human-readable report ending with "VERDICT <name> PASS|FAIL".
  std::string to_string() const;
};

/// (a) the target prefix is good; (b) S^L equals the length-L factors of
/// the target prefix; (c) every extra check listed in the manifest.
CharacterizationReport verify_characterization(const TheoremManifest& m, const VerifyOptions& opts = {});

/// Manifest files in `dir`: regular files without an extension, by name.
std::vector<std::string> list_manifests(const std::string& dir);

/// Verifies every manifest of a directory. With opts.search.workers > 1
/// the manifests run concurrently (each single-threaded); reports keep
/// directory order either way.
std::vector<CharacterizationReport> verify_directory(const std::string& dir, const VerifyOptions& opts = {});

}  // namespace morphic
