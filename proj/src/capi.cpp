#include "morphic/morphic.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "morphic/catalog.hpp"
#include "morphic/characterize.hpp"
#include "morphic/constraints.hpp"
#include "morphic/formula.hpp"
#include "morphic/repetition.hpp"
#include "morphic/search.hpp"

struct morphic_morphism {
  morphic::Morphism value;
};
struct morphic_constraints {
  morphic::ConstraintSet value;
};
struct morphic_manifest {
  morphic::TheoremManifest value;
};

namespace {

thread_local std::string last_error;

morphic_status fail(morphic_status s, const char* what) {
  last_error = what;
  return s;
}

// Maps library exceptions to status codes.
template <class Fn>
morphic_status guard(Fn fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const morphic::SyntaxError& e) {
    return fail(MORPHIC_ERR_SYNTAX, e.what());
  } catch (const morphic::AlphabetError& e) {
    return fail(MORPHIC_ERR_ALPHABET, e.what());
  } catch (const morphic::DomainError& e) {
    return fail(MORPHIC_ERR_DOMAIN, e.what());
  } catch (const morphic::ResourceError& e) {
    return fail(MORPHIC_ERR_RESOURCE, e.what());
  } catch (const morphic::IoError& e) {
    return fail(MORPHIC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MORPHIC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(MORPHIC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MORPHIC_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw morphic::DomainError(std::string(what) + " must not be NULL");
}

morphic::Word word_arg(const char* w) {
  require(w, "word");
  return morphic::Word::parse(w);
}

morphic::SearchOptions search_options(const morphic_search_options* o) {
  morphic::SearchOptions s;
  if (!o) return s;
  s.node_budget = o->node_budget;
  s.time_limit_seconds = o->time_limit_seconds;
  s.workers = o->workers;
  s.descending_letters = o->descending_letters != 0;
  if (o->progress) {
    morphic_progress_fn fn = o->progress;
    void* user = o->progress_user;
    s.progress = [fn, user](std::uint64_t nodes, std::size_t depth) { fn(nodes, depth, user); };
  }
  return s;
}

morphic::VerifyOptions verify_options(const morphic_verify_options* o) {
  morphic::VerifyOptions v;
  if (!o) return v;
  if (o->check_length) v.check_length = o->check_length;
  if (o->horizon) v.horizon = o->horizon;
  if (o->prefix) v.prefix = o->prefix;
  v.extended = o->extended != 0;
  v.search = search_options(&o->search);
  return v;
}

std::string lines(const std::set<morphic::Word>& words) {
  std::string out;
  for (const auto& w : words) out += w.str() + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* morphic_version(void) { return "0.1.0"; }
const char* morphic_last_error(void) { return last_error.c_str(); }
void morphic_string_free(char* s) { std::free(s); }

const char* morphic_status_name(morphic_status status) {
  switch (status) {
    case MORPHIC_OK: return "ok";
    case MORPHIC_REFUTED: return "refuted";
    case MORPHIC_ERR_SYNTAX: return "syntax error";
    case MORPHIC_ERR_RESOURCE: return "resource budget exceeded";
    case MORPHIC_ERR_DOMAIN: return "domain error";
    case MORPHIC_ERR_IO: return "i/o error";
    case MORPHIC_ERR_ALPHABET: return "alphabet error";
    case MORPHIC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void morphic_search_options_init(morphic_search_options* opts) {
  if (!opts) return;
  *opts = morphic_search_options{};
  opts->node_budget = morphic::kDefaultNodeBudget;
  opts->workers = 1;
}

void morphic_verify_options_init(morphic_verify_options* opts) {
  if (!opts) return;
  *opts = morphic_verify_options{};
  morphic_search_options_init(&opts->search);
}

morphic_status morphic_morphism_parse(const char* text, morphic_morphism** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new morphic_morphism{morphic::resolve_morphism(text)};
    return MORPHIC_OK;
  });
}

void morphic_morphism_free(morphic_morphism* m) { delete m; }

morphic_status morphic_morphism_format(const morphic_morphism* m, char** out) {
  return guard([&] {
    require(m, "morphism");
    require(out, "out");
    *out = dup(m->value.to_string());
    return MORPHIC_OK;
  });
}

morphic_status morphic_morphism_compose(const morphic_morphism* outer, const morphic_morphism* inner,
                                        morphic_morphism** out) {
  return guard([&] {
    require(outer, "outer");
    require(inner, "inner");
    require(out, "out");
    *out = new morphic_morphism{morphic::compose(outer->value, inner->value)};
    return MORPHIC_OK;
  });
}

morphic_status morphic_morphism_erase(const morphic_morphism* m, const char* letters, morphic_morphism** out) {
  return guard([&] {
    require(m, "morphism");
    require(letters, "letters");
    require(out, "out");
    morphic::LetterSet kill;
    for (const char* p = letters; *p; ++p) {
      if (*p < '0' || *p > '9') throw morphic::SyntaxError("erase: letters must be digits");
      kill.set(static_cast<std::size_t>(*p - '0'));
    }
    *out = new morphic_morphism{morphic::erase_letters(m->value, kill)};
    return MORPHIC_OK;
  });
}

morphic_status morphic_morphism_equal(const morphic_morphism* a, const morphic_morphism* b, int* equal) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    *equal = morphic::morphisms_equal(a->value, b->value) ? 1 : 0;
    return MORPHIC_OK;
  });
}

morphic_status morphic_generate(const morphic_morphism* inner, const morphic_morphism* outer, size_t length,
                                char** out) {
  return guard([&] {
    require(inner, "inner");
    require(out, "out");
    morphic::Word w = outer ? morphic::morphic_prefix(outer->value, inner->value, length)
                            : morphic::fixed_point_prefix(inner->value, length);
    *out = dup(w.str());
    return MORPHIC_OK;
  });
}

morphic_status morphic_squares(const char* word, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup(lines(morphic::distinct_squares(word_arg(word))));
    return MORPHIC_OK;
  });
}

morphic_status morphic_overlaps(const char* word, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup(lines(morphic::distinct_min_overlaps(word_arg(word))));
    return MORPHIC_OK;
  });
}

morphic_status morphic_max_exponent(const char* word, morphic_exponent* out) {
  return guard([&] {
    require(out, "out");
    auto r = morphic::max_exponent(word_arg(word));
    *out = morphic_exponent{r.exponent.num(), r.exponent.den(), r.witness.start, r.witness.period,
                            r.witness.length};
    return MORPHIC_OK;
  });
}

morphic_status morphic_match(const char* word, const char* formula, size_t cap, uint64_t step_budget, char** out,
                             size_t* count) {
  return guard([&] {
    require(formula, "formula");
    require(out, "out");
    *out = nullptr;
    morphic::Word w = word_arg(word);
    morphic::Formula f = morphic::Formula::parse(formula);
    auto emit = [&](const std::set<morphic::Assignment>& occ) {
      std::string text;
      for (const auto& a : occ) text += a.to_string() + "\n";
      *out = dup(text);
      if (count) *count = occ.size();
    };
    try {
      emit(morphic::find_occurrences(w, f, cap, step_budget ? step_budget : morphic::kDefaultStepBudget));
    } catch (const morphic::OccurrenceBudgetExceeded& e) {
      emit(e.partial());
      throw;
    }
    return MORPHIC_OK;
  });
}

morphic_status morphic_constraints_parse(const char* text, morphic_constraints** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new morphic_constraints{morphic::parse_constraints(text)};
    return MORPHIC_OK;
  });
}

morphic_status morphic_constraints_load(const char* path, morphic_constraints** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new morphic_constraints{morphic::load_constraints(path)};
    return MORPHIC_OK;
  });
}

void morphic_constraints_free(morphic_constraints* c) { delete c; }

morphic_status morphic_check(const morphic_constraints* c, const char* word, char** violation) {
  return guard([&] {
    require(c, "constraints");
    if (violation) *violation = nullptr;
    auto v = morphic::check(word_arg(word), c->value);
    if (!v) return MORPHIC_OK;
    if (violation) *violation = dup(v->to_string());
    return MORPHIC_REFUTED;
  });
}

morphic_status morphic_search(const morphic_constraints* c, size_t budget_length, const morphic_search_options* opts,
                              morphic_search_result* out) {
  return guard([&] {
    require(c, "constraints");
    require(out, "out");
    *out = morphic_search_result{};
    auto fill = [&](const morphic::SearchOutcome& o) {
      out->exhausted = o.kind == morphic::SearchKind::exhausted;
      out->max_length = o.max_length;
      out->witness = dup(o.witness ? o.witness->str() : std::string());
      out->tree_nodes = o.tree_nodes;
    };
    try {
      fill(morphic::longest_word_search(c->value, budget_length, search_options(opts)));
    } catch (const morphic::SearchBudgetExceeded& e) {
      fill(e.best());
      throw;
    }
    return MORPHIC_OK;
  });
}

void morphic_search_result_clear(morphic_search_result* r) {
  if (!r) return;
  std::free(r->witness);
  *r = morphic_search_result{};
}

morphic_status morphic_extendable(const morphic_constraints* c, size_t length, size_t horizon,
                                  const morphic_search_options* opts, char** words, char** witnesses,
                                  uint64_t* tree_nodes) {
  return guard([&] {
    require(c, "constraints");
    require(words, "words");
    auto s = morphic::extendable_set(c->value, length, horizon, search_options(opts));
    std::string a, b;
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      a += s.words[i].str() + "\n";
      b += s.witnesses[i].str() + "\n";
    }
    *words = dup(a);
    if (witnesses) *witnesses = dup(b);
    if (tree_nodes) *tree_nodes = s.tree_nodes;
    return MORPHIC_OK;
  });
}

morphic_status morphic_counts(const morphic_constraints* c, size_t n_max, const morphic_search_options* opts,
                              uint64_t* counts) {
  return guard([&] {
    require(c, "constraints");
    require(counts, "counts");
    auto v = morphic::count_by_length(c->value, n_max, search_options(opts));
    std::copy(v.begin(), v.end(), counts);
    return MORPHIC_OK;
  });
}

morphic_status morphic_manifest_load(const char* path, morphic_manifest** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new morphic_manifest{morphic::load_manifest(path)};
    return MORPHIC_OK;
  });
}

void morphic_manifest_free(morphic_manifest* m) { delete m; }

morphic_status morphic_verify(const morphic_manifest* m, const morphic_verify_options* opts, char** report) {
  return guard([&] {
    require(m, "manifest");
    require(report, "report");
    auto r = morphic::verify_characterization(m->value, verify_options(opts));
    *report = dup(r.to_string());
    return r.passed() ? MORPHIC_OK : MORPHIC_REFUTED;
  });
}

morphic_status morphic_verify_dir(const char* dir, const morphic_verify_options* opts, char** report,
                                  size_t* failures) {
  return guard([&] {
    require(dir, "dir");
    require(report, "report");
    auto reports = morphic::verify_directory(dir, verify_options(opts));
    if (reports.empty()) throw morphic::IoError(std::string("no manifests in ") + dir);
    std::string text;
    std::size_t failed = 0;
    for (const auto& r : reports) {
      if (!text.empty()) text += "\n";
      text += r.to_string();
      failed += r.passed() ? 0 : 1;
    }
    *report = dup(text);
    if (failures) *failures = failed;
    return failed ? MORPHIC_REFUTED : MORPHIC_OK;
  });
}

}  // extern "C"
