#include "morphic/characterize.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "morphic/catalog.hpp"
#include "morphic/error.hpp"
#include "morphic/repetition.hpp"

namespace morphic {

bool code_factor_membership(const Word& v, const std::vector<Word>& pieces) {
  if (pieces.empty()) throw DomainError("code_factor_membership: no pieces");
  for (const Word& x : pieces)
    if (x.empty()) throw DomainError("code_factor_membership: empty piece");
  const std::string_view s = v.digits();
  const std::size_t n = s.size();
  if (n == 0) return true;

  for (const Word& x : pieces)
    if (x.digits().find(s) != std::string_view::npos) return true;

  // boundary[i]: some parse puts a piece boundary just before s[i].
  std::vector<char> boundary(n + 1, 0);
  boundary[0] = 1;
  for (const Word& x : pieces) {
    const std::string_view p = x.digits();
    for (std::size_t i = 1; i <= std::min(n, p.size()); ++i)
      if (p.substr(p.size() - i) == s.substr(0, i)) boundary[i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!boundary[i]) continue;
    for (const Word& x : pieces) {
      const std::string_view p = x.digits();
      if (i + p.size() <= n) {
        if (s.compare(i, p.size(), p) == 0) boundary[i + p.size()] = 1;
      } else if (p.compare(0, n - i, s.substr(i)) == 0) {
        return true;
      }
    }
  }
  return boundary[n] != 0;
}

bool morphisms_equal(const Morphism& a, const Morphism& b) {
  if (a.alphabet_size() != b.alphabet_size())
    throw DomainError("morphisms_equal: source alphabets differ (" + std::to_string(a.alphabet_size()) + " vs " +
                      std::to_string(b.alphabet_size()) + ")");
  return a == b;
}

bool every_window_contains(const Word& w, std::size_t k, const Word& u) {
  if (k > w.size()) throw DomainError("every_window_contains: window longer than the word");
  if (u.size() > k) throw DomainError("every_window_contains: required word longer than the window");
  if (u.empty()) return true;
  const std::string_view d = w.digits();
  const std::size_t slack = k - u.size();  // starts allowed in [i, i + slack]
  std::size_t covered = 0;                 // windows [0, covered) are satisfied
  const std::size_t windows = d.size() - k + 1;
  for (std::size_t pos = d.find(u.digits()); pos != std::string_view::npos; pos = d.find(u.digits(), pos + 1)) {
    const std::size_t first = pos > slack ? pos - slack : 0;
    if (first > covered) return false;
    covered = std::max(covered, pos + 1);
    if (covered >= windows) return true;
  }
  return covered >= windows;
}

// ---------------------------------------------------------------------------
// Manifest files

std::string TheoremManifest::resolve(const std::string& relative) const {
  namespace fs = std::filesystem;
  fs::path p(relative);
  if (p.is_absolute() || path.empty()) return p.string();
  return (fs::path(path).parent_path() / p).lexically_normal().string();
}

namespace {

std::size_t manifest_count(const std::string& tok, int line) {
  std::size_t used = 0, v = 0;
  try {
    v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size() || tok[0] == '-')
    throw SyntaxError("manifest line " + std::to_string(line) + ": expected a non-negative integer, got '" + tok +
                      "'");
  return v;
}

}  // namespace

TheoremManifest parse_manifest(std::string_view text, const std::string& path) {
  TheoremManifest m;
  m.path = path;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string tok; ls >> tok;) args.push_back(tok);
    auto bad = [&](const std::string& why) {
      return SyntaxError("manifest line " + std::to_string(line_no) + " (" + key + "): " + why);
    };
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) throw bad("wrong number of arguments");
    };
    auto count = [&](std::size_t i) { return manifest_count(args[i], line_no); };
    auto words = [&](std::size_t from) {
      std::set<Word> out;
      for (std::size_t i = from; i < args.size(); ++i) out.insert(Word::parse(args[i]));
      return out;
    };
    auto morphism_text = [&](const std::string& t) {
      resolve_morphism(t);  // validates
      return t;
    };

    if (key == "name") {
      need(1, 1);
      m.name = args[0];
    } else if (key == "constraints") {
      need(1, 1);
      m.constraints_path = args[0];
    } else if (key == "target-outer") {
      need(1, 1);
      m.target_outer = morphism_text(args[0]);
    } else if (key == "target-inner" || key == "target") {
      need(1, 1);
      m.target_inner = morphism_text(args[0]);
    } else if (key == "check-length") {
      need(1, 1);
      m.check_length = count(0);
    } else if (key == "horizon") {
      need(1, 1);
      m.horizon = count(0);
    } else if (key == "prefix") {
      need(1, 1);
      m.prefix = count(0);
    } else if (key == "expect-squares") {
      m.expect_squares = words(0);
    } else if (key == "expect-overlaps") {
      m.expect_overlaps = words(0);
    } else if (key == "expect-overlaps-derived") {
      need(0, 0);
      m.overlaps_derived = true;
    } else if (key == "localizer") {
      need(3, 4);
      Localizer loc{count(0), Word::parse(args[1]), Formula::parse(args[2]), std::nullopt};
      if (args.size() == 4) loc.avoid_length = count(3);
      m.localizers.push_back(std::move(loc));
    } else if (key == "code-pieces") {
      need(1, SIZE_MAX);
      if (args[0] == "from-target-outer") {
        need(1, 1);
        m.piece_source = TheoremManifest::PieceSource::target_outer;
      } else if (args[0] == "from-target-inner") {
        need(1, 1);
        m.piece_source = TheoremManifest::PieceSource::target_inner;
      } else {
        m.piece_source = TheoremManifest::PieceSource::list;
        for (const auto& a : args) m.pieces.push_back(Word::parse(a));
      }
    } else if (key == "expect-occurrences") {
      // FORMULA CAP PREFIX IMAGE...
      need(3, SIZE_MAX);
      OccurrenceExpectation e{Formula::parse(args[0]), count(1), count(2), words(3)};
      if (!e.formula.is_pattern()) throw bad("only single-fragment patterns are supported");
      if (e.prefix_length == 0) e.prefix_length.reset();
      m.occurrences.push_back(std::move(e));
    } else if (key == "morphism-identity") {
      need(3, 3);
      m.identities.push_back({morphism_text(args[0]), morphism_text(args[1]), morphism_text(args[2])});
    } else if (key == "erase-identity") {
      need(3, 3);
      LetterSet letters;
      for (char ch : args[1]) {
        if (ch < '0' || ch > '9') throw bad("letters must be digits");
        letters.set(static_cast<std::size_t>(ch - '0'));
      }
      m.erasures.push_back({morphism_text(args[0]), letters, morphism_text(args[2])});
    } else if (key == "expect-walk") {
      need(1, 1);
      builtin_graph(args[0]);
      m.expect_walk = args[0];
    } else if (key == "expect-avoids") {
      need(2, 2);
      m.expect_avoids.emplace_back(Formula::parse(args[0]), count(1));
    } else if (key == "expect-absent-factors") {
      need(1, SIZE_MAX);
      for (const auto& a : args) m.absent_factors.push_back(Word::parse(a));
    } else if (key == "expect-exponent-free") {
      need(1, 2);
      bool strict = true;
      if (args.size() == 2) {
        if (args[1] == "non-strict")
          strict = false;
        else if (args[1] != "strict")
          throw bad("expected strict or non-strict");
      }
      m.exponent_free = ExponentCap{Rational::parse(args[0]), strict};
    } else if (key == "expect-good") {
      need(1, 1);
      m.expect_good.push_back(args[0]);
    } else if (key == "refute") {
      need(1, 2);
      if (args.size() == 2 && args[1] != "extended") throw bad("expected 'extended'");
      m.refutations.push_back({args[0], args.size() == 2});
    } else if (key == "expect-long-word") {
      need(2, 2);
      m.long_words.push_back({args[0], count(1)});
    } else {
      throw bad("unknown directive");
    }
  }
  if (m.name.empty()) throw SyntaxError("manifest: missing name");
  if (m.target_outer && !m.target_inner) throw SyntaxError("manifest " + m.name + ": target-outer without target-inner");
  if (m.check_length == 0) throw SyntaxError("manifest " + m.name + ": check-length must be positive");
  if (m.prefix && *m.prefix < m.check_length)
    throw SyntaxError("manifest " + m.name + ": prefix shorter than check-length");
  if (m.piece_source == TheoremManifest::PieceSource::target_outer && !m.target_outer)
    throw SyntaxError("manifest " + m.name + ": code-pieces from-target-outer needs target-outer");
  return m;
}

TheoremManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Verification

bool CharacterizationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckResult::Status::fail; });
}

std::string CharacterizationReport::to_string() const {
  std::ostringstream out;
  out << "== " << name << " ==\n";
  out << "scale: L=" << check_length << " horizon=" << horizon << " prefix=" << prefix << '\n';
  for (const CheckResult& c : checks) {
    const char* tag = c.status == CheckResult::Status::pass   ? "PASS"
                      : c.status == CheckResult::Status::fail ? "FAIL"
                                                              : "SKIP";
    out << '[' << tag << "] " << c.label << '\n';
    for (const std::string& line : c.lines) out << "       " << line << '\n';
  }
  for (const std::string& note : notes) out << "note: " << note << '\n';
  out << "VERDICT " << name << ' ' << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

std::string shorten(const std::optional<Word>& w) {
  if (!w) return "(none)";
  if (w->size() <= 60) return w->str();
  return w->prefix(60).str() + "... (" + std::to_string(w->size()) + " letters)";
}

std::string join(const std::set<Word>& words, std::size_t limit = 40) {
  std::string out = "{";
  std::size_t i = 0;
  for (const Word& w : words) {
    if (i == limit) {
      out += ", ... (" + std::to_string(words.size()) + " total)";
      break;
    }
    if (i++) out += ", ";
    out += w.str();
  }
  return out + "}";
}

std::string join(const std::vector<Word>& words, std::size_t limit = 40) {
  return join(std::set<Word>(words.begin(), words.end()), limit);
}

CheckResult make_check(std::string label, bool pass) {
  CheckResult c;
  c.label = std::move(label);
  c.status = pass ? CheckResult::Status::pass : CheckResult::Status::fail;
  return c;
}

// Runs fn, turning library errors into a failed check instead of an abort.
template <class Fn>
CheckResult guarded(const std::string& label, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    CheckResult c = make_check(label, false);
    c.lines.push_back(std::string("error: ") + e.what());
    return c;
  }
}

ConstraintSet load_manifest_constraints(const TheoremManifest& m, const Word& target) {
  if (m.constraints_path) return load_constraints(m.resolve(*m.constraints_path));
  ConstraintSet c;
  c.alphabet_size = std::max(2, target.max_letter() + 1);
  return c;
}

}  // namespace

CharacterizationReport verify_characterization(const TheoremManifest& m, const VerifyOptions& opts) {
  CharacterizationReport r;
  r.name = m.name;
  r.check_length = opts.check_length.value_or(m.check_length);
  r.horizon = opts.horizon.value_or(m.horizon.value_or(r.check_length));
  r.prefix = opts.prefix.value_or(m.prefix.value_or(std::max<std::size_t>(10 * r.check_length, 10000)));
  const std::size_t L = r.check_length;

  Word target;
  std::optional<ConstraintSet> constraints;
  if (m.has_target()) {
    try {
      const Morphism inner = resolve_morphism(*m.target_inner);
      target = m.target_outer ? morphic_prefix(resolve_morphism(*m.target_outer), inner, r.prefix)
                              : fixed_point_prefix(inner, r.prefix);
      constraints = load_manifest_constraints(m, target);
    } catch (const Error& e) {
      CheckResult c = make_check("target and constraints", false);
      c.lines.push_back(std::string("error: ") + e.what());
      r.checks.push_back(std::move(c));
      return r;
    }

    // (a)
    r.checks.push_back(guarded("(a) target prefix satisfies the constraints", [&] {
      auto v = check(target, *constraints);
      CheckResult c = make_check("(a) target prefix satisfies the constraints", !v);
      if (v) c.lines.push_back("violation: " + v->to_string());
      return c;
    }));

    // (b)
    std::vector<Word> language;
    r.checks.push_back(guarded("(b) S^" + std::to_string(L) + " equals Fact_" + std::to_string(L) + "(target)", [&] {
      const std::string label = "(b) S^" + std::to_string(L) + " equals Fact_" + std::to_string(L) + "(target)";
      if (target.size() < L) {
        CheckResult c = make_check(label, false);
        c.lines.push_back("prefix of length " + std::to_string(target.size()) + " is shorter than L");
        return c;
      }
      ExtendableSet s = extendable_set(*constraints, L, r.horizon, opts.search);
      language = s.words;
      std::vector<Word> fact = factors(target, L);
      std::set_difference(s.words.begin(), s.words.end(), fact.begin(), fact.end(),
                          std::back_inserter(r.only_in_language));
      std::set_difference(fact.begin(), fact.end(), s.words.begin(), s.words.end(),
                          std::back_inserter(r.only_in_target));
      CheckResult c = make_check(label, r.only_in_language.empty() && r.only_in_target.empty());
      // node counts depend on the worker split, so they stay out of the report
      c.lines.push_back("|S^L| = " + std::to_string(s.words.size()) + ", |Fact_L| = " + std::to_string(fact.size()));
      if (!r.only_in_language.empty()) c.lines.push_back("S^L minus Fact_L: " + join(r.only_in_language));
      if (!r.only_in_target.empty()) c.lines.push_back("Fact_L minus S^L: " + join(r.only_in_target));

      if (L > 1) {
        ExtendableSet below = extendable_set(*constraints, L - 1, r.horizon, opts.search);
        std::vector<Word> fact_below = factors(target, L - 1);
        const bool same = below.words == fact_below;
        c.lines.push_back("sanity at L-1: |S^(L-1)| = " + std::to_string(below.words.size()) +
                          ", |Fact_(L-1)| = " + std::to_string(fact_below.size()) + (same ? ", equal" : ", DIFFERENT"));
        if (!same) c.status = CheckResult::Status::fail;
      }
      if (factors(target.prefix(target.size() / 2), L).size() != fact.size())
        r.notes.push_back("saturation warning: Fact_L of the target prefix still grows after half its length");
      return c;
    }));

    std::vector<Word> pieces;
    if (m.piece_source == TheoremManifest::PieceSource::list) pieces = m.pieces;
    if (m.piece_source == TheoremManifest::PieceSource::target_outer) pieces = resolve_morphism(*m.target_outer).images();
    if (m.piece_source == TheoremManifest::PieceSource::target_inner) pieces = resolve_morphism(*m.target_inner).images();
    pieces.erase(std::remove_if(pieces.begin(), pieces.end(), [](const Word& w) { return w.empty(); }), pieces.end());
    if (m.piece_source != TheoremManifest::PieceSource::none) {
      r.checks.push_back(guarded("(c) S^L lies in the code " + join(pieces), [&] {
        CheckResult c = make_check("(c) S^L lies in the code " + join(pieces), true);
        std::set<Word> outside;
        for (const Word& v : language)
          if (!code_factor_membership(v, pieces)) outside.insert(v);
        if (language.empty()) {
          c.status = CheckResult::Status::skipped;
          c.lines.push_back("no S^L available");
        } else if (!outside.empty()) {
          c.status = CheckResult::Status::fail;
          c.lines.push_back("outside the code: " + join(outside));
        }
        return c;
      }));
    }

    if (m.expect_squares) {
      r.checks.push_back(guarded("(c) square inventory", [&] {
        std::set<Word> found = distinct_squares(target);
        CheckResult c = make_check("(c) square inventory", found == *m.expect_squares);
        c.lines.push_back("found " + join(found));
        if (found != *m.expect_squares) c.lines.push_back("expected " + join(*m.expect_squares));
        return c;
      }));
    }
    if (m.expect_overlaps || m.overlaps_derived) {
      std::set<Word> found = distinct_min_overlaps(target);
      if (m.expect_overlaps) {
        CheckResult c = make_check("(c) minimal overlap inventory", found == *m.expect_overlaps);
        c.lines.push_back("found " + join(found));
        if (found != *m.expect_overlaps) c.lines.push_back("expected " + join(*m.expect_overlaps));
        r.checks.push_back(std::move(c));
      } else {
        r.notes.push_back("minimal overlaps of the target prefix (recorded, not asserted): " + join(found));
      }
    }
    for (const Localizer& loc : m.localizers) {
      const std::string label = "(c) localizer: every " + std::to_string(loc.window) + "-window contains " +
                                loc.required.str() + ", prefix avoids " + loc.reduced.to_string();
      r.checks.push_back(guarded(label, [&] {
        const bool windows = target.size() >= loc.window && every_window_contains(target, loc.window, loc.required);
        const std::size_t len = std::min(target.size(), loc.avoid_length.value_or(target.size()));
        const bool avoided = avoids(target.prefix(len), loc.reduced);
        CheckResult c = make_check(label, windows && avoided);
        c.lines.push_back(std::string("window property ") + (windows ? "holds" : "FAILS") + "; pattern " +
                          (avoided ? "avoided" : "FOUND") + " in the length-" + std::to_string(len) + " prefix");
        return c;
      }));
      r.notes.push_back("assumption: the window property plus avoidance of " + loc.reduced.to_string() +
                        " rules out the large squares beyond the checked prefix; this step is not re-proved");
    }
    for (const OccurrenceExpectation& e : m.occurrences) {
      const std::string label = "(c) occurrences of " + e.formula.to_string() + " (cap " + std::to_string(e.cap) + ")";
      r.checks.push_back(guarded(label, [&] {
        const std::size_t len = std::min(target.size(), e.prefix_length.value_or(target.size()));
        auto occ = find_occurrences(target.prefix(len), e.formula, e.cap);
        std::set<Word> images;
        for (const Assignment& a : occ) images.insert(fragment_images(e.formula, a).front());
        CheckResult c = make_check(label, occ.size() == e.images.size() && images == e.images);
        c.lines.push_back(std::to_string(occ.size()) + " distinct assignments in the length-" + std::to_string(len) +
                          " prefix; images " + join(images));
        if (c.status == CheckResult::Status::fail) c.lines.push_back("expected images " + join(e.images));
        return c;
      }));
    }
    if (m.expect_walk) {
      r.checks.push_back(guarded("(c) walk on " + *m.expect_walk, [&] {
        return make_check("(c) walk on " + *m.expect_walk, is_walk(target, builtin_graph(*m.expect_walk)));
      }));
    }
    for (const auto& [f, len_wanted] : m.expect_avoids) {
      const std::size_t len = std::min(target.size(), len_wanted);
      const std::string label = "(c) length-" + std::to_string(len) + " prefix avoids " + f.to_string();
      r.checks.push_back(guarded(label, [&] { return make_check(label, avoids(target.prefix(len), f)); }));
    }
    if (!m.absent_factors.empty()) {
      std::set<Word> present;
      for (const Word& u : m.absent_factors)
        if (contains_factor(target, u)) present.insert(u);
      CheckResult c = make_check("(c) absent factors " + join(m.absent_factors), present.empty());
      if (!present.empty()) c.lines.push_back("present: " + join(present));
      r.checks.push_back(std::move(c));
    }
    if (m.exponent_free) {
      const std::string label = "(c) prefix is " + m.exponent_free->exponent.to_string() +
                                (m.exponent_free->strict ? "+" : "") + "-free";
      r.checks.push_back(guarded(label, [&] {
        auto v = find_exponent_violation(target, m.exponent_free->exponent, m.exponent_free->strict);
        CheckResult c = make_check(label, !v);
        if (v) c.lines.push_back("repetition " + target.factor(v->start, v->length).str() + " of exponent " +
                                 v->exponent().to_string());
        return c;
      }));
    }
    for (const std::string& path : m.expect_good) {
      const std::string label = "(c) target prefix satisfies " + path;
      r.checks.push_back(guarded(label, [&] {
        auto v = check(target, load_constraints(m.resolve(path)));
        CheckResult c = make_check(label, !v);
        if (v) c.lines.push_back("violation: " + v->to_string());
        return c;
      }));
    }
    r.notes.push_back("bounded check: factor sets are compared at length L with two-sided extension by the horizon; "
                      "the bi-infinite statement itself is not machine-proved");
  }

  for (const MorphismIdentity& id : m.identities) {
    const std::string label = "(c) " + id.outer + " o " + id.inner + " = " + id.expected;
    r.checks.push_back(guarded(label, [&] {
      Morphism composed = compose(resolve_morphism(id.outer), resolve_morphism(id.inner));
      CheckResult c = make_check(label, morphisms_equal(composed, resolve_morphism(id.expected)));
      c.lines.push_back("composition is " + composed.to_string());
      return c;
    }));
  }
  for (const EraseIdentity& e : m.erasures) {
    std::string letters;
    for (int a = 0; a < kMaxAlphabet; ++a)
      if (e.letters.test(static_cast<std::size_t>(a))) letters.push_back(static_cast<char>('0' + a));
    const std::string label = "(c) erasing {" + letters + "} from " + e.morphism + " gives " + e.expected;
    r.checks.push_back(guarded(label, [&] {
      Morphism erased = erase_letters(resolve_morphism(e.morphism), e.letters);
      CheckResult c = make_check(label, morphisms_equal(erased, resolve_morphism(e.expected)));
      c.lines.push_back("result is " + erased.to_string());
      return c;
    }));
  }
  for (const Refutation& ref : m.refutations) {
    const std::string label = "(c) no infinite word satisfies " + ref.constraints_path;
    if (ref.extended && !opts.extended) {
      CheckResult c;
      c.label = label;
      c.status = CheckResult::Status::skipped;
      c.lines.push_back("extended check; run with the extended option");
      r.checks.push_back(std::move(c));
      continue;
    }
    r.checks.push_back(guarded(label, [&] {
      ConstraintSet c2 = load_constraints(m.resolve(ref.constraints_path));
      SearchOutcome o = longest_word_search(c2, 10000, opts.search);
      CheckResult c = make_check(label, o.kind == SearchKind::exhausted);
      c.lines.push_back((o.kind == SearchKind::exhausted ? "exhausted: longest good word has length "
                                                         : "reached length ") +
                        std::to_string(o.max_length) + ", witness " + shorten(o.witness) + ", " +
                        std::to_string(o.tree_nodes) + " nodes");
      return c;
    }));
  }
  for (const LongWordExpectation& lw : m.long_words) {
    const std::string label = "(c) a good word of length " + std::to_string(lw.length) + " exists for " +
                              lw.constraints_path;
    r.checks.push_back(guarded(label, [&] {
      ConstraintSet c2 = load_constraints(m.resolve(lw.constraints_path));
      SearchOutcome o = longest_word_search(c2, lw.length, opts.search);
      CheckResult c = make_check(label, o.max_length >= lw.length);
      if (o.witness && o.max_length >= lw.length)
        c.lines.push_back("first witness starts " + o.witness->prefix(std::min<std::size_t>(60, o.max_length)).str());
      else
        c.lines.push_back("longest good word has length " + std::to_string(o.max_length));
      return c;
    }));
  }
  return r;
}

std::vector<std::string> list_manifests(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot list manifest directory " + dir);
  std::vector<std::string> out;
  for (const auto& entry : it) {
    const fs::path& p = entry.path();
    if (entry.is_regular_file() && !p.has_extension() && p.filename().string()[0] != '.') out.push_back(p.string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CharacterizationReport> verify_directory(const std::string& dir, const VerifyOptions& opts) {
  const std::vector<std::string> paths = list_manifests(dir);
  std::vector<CharacterizationReport> reports(paths.size());
  auto run_one = [&](std::size_t i, const VerifyOptions& o) {
    try {
      reports[i] = verify_characterization(load_manifest(paths[i]), o);
    } catch (const Error& e) {
      CharacterizationReport r;
      r.name = std::filesystem::path(paths[i]).filename().string();
      CheckResult c = make_check("manifest " + paths[i], false);
      c.lines.push_back(std::string("error: ") + e.what());
      r.checks.push_back(std::move(c));
      reports[i] = std::move(r);
    }
  };
  const unsigned workers = std::max(1u, opts.search.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < paths.size(); ++i) run_one(i, opts);
    return reports;
  }
  VerifyOptions single = opts;
  single.search.workers = 1;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(workers, paths.size()); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < paths.size();) run_one(i, single);
    });
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace morphic
