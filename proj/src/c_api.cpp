#include "rothe/rothe.h"

#include <cstring>
#include <new>
#include <string>

#include "rothe/commands.hpp"
#include "rothe/error.hpp"

struct rothe_perm {
  rothe::Permutation value;
};

struct rothe_poly {
  rothe::Polynomial value;
};

namespace {

thread_local std::string last_error;

rothe_status status_for(rothe::ErrorCode code) {
  using rothe::ErrorCode;
  switch (code) {
  case ErrorCode::DuplicateValue:
    return ROTHE_ERR_DUPLICATE_VALUE;
  case ErrorCode::ValueOutOfRange:
    return ROTHE_ERR_OUT_OF_RANGE;
  case ErrorCode::NotThreeTwoOneAvoiding:
  case ErrorCode::NotApplicable:
  case ErrorCode::No1432Occurrence:
  case ErrorCode::MethodNotApplicable:
    return ROTHE_ERR_METHOD_NOT_APPLICABLE;
  case ErrorCode::GroundSetTooLarge:
    return ROTHE_ERR_GROUND_SET_TOO_LARGE;
  case ErrorCode::ResourceCap:
    return ROTHE_ERR_RESOURCE_CAP;
  case ErrorCode::ParseError:
    return ROTHE_ERR_PARSE;
  case ErrorCode::InvalidArgument:
  case ErrorCode::SquareNotInDiagram:
  case ErrorCode::RingMismatch:
  case ErrorCode::EmptySequence:
  case ErrorCode::ZeroPolynomial:
    return ROTHE_ERR_INVALID_ARGUMENT;
  case ErrorCode::NonExactDivision:
  case ErrorCode::Internal:
    return ROTHE_ERR_INTERNAL;
  }
  return ROTHE_ERR_INTERNAL;
}

rothe_status fail(rothe_status status, const std::string &message) {
  last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F> rothe_status guarded(F &&body) {
  try {
    last_error.clear();
    return body();
  } catch (const rothe::Error &e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(ROTHE_ERR_RESOURCE_CAP, "out of memory");
  } catch (const std::exception &e) {
    return fail(ROTHE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ROTHE_ERR_INTERNAL, "unknown error");
  }
}

rothe_status null_argument(const char *name) {
  return fail(ROTHE_ERR_INVALID_ARGUMENT,
              std::string("argument '") + name + "' is NULL");
}

char *copy_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rothe::Format format_from(rothe_format f) {
  if (f == ROTHE_FORMAT_JSON_LINES)
    return rothe::Format::JsonLines;
  if (f == ROTHE_FORMAT_PRETTY)
    return rothe::Format::Pretty;
  throw rothe::Error(rothe::ErrorCode::InvalidArgument, "unknown format");
}

rothe::LineSink sink(rothe_line_fn emit, void *user) {
  return [emit, user](const std::string &line) {
    if (emit)
      emit(line.c_str(), user);
  };
}

} // namespace

extern "C" {

const char *rothe_last_error(void) { return last_error.c_str(); }

const char *rothe_status_name(rothe_status status) {
  switch (status) {
  case ROTHE_OK:
    return "ok";
  case ROTHE_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case ROTHE_ERR_DUPLICATE_VALUE:
    return "duplicate value";
  case ROTHE_ERR_OUT_OF_RANGE:
    return "value out of range";
  case ROTHE_ERR_METHOD_NOT_APPLICABLE:
    return "method not applicable";
  case ROTHE_ERR_GROUND_SET_TOO_LARGE:
    return "ground set too large";
  case ROTHE_ERR_VERIFICATION_FAILED:
    return "verification failed";
  case ROTHE_ERR_RESOURCE_CAP:
    return "resource cap";
  case ROTHE_ERR_PARSE:
    return "parse error";
  case ROTHE_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

rothe_status rothe_perm_parse(const char *text, rothe_perm **out) {
  if (!text)
    return null_argument("text");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = new rothe_perm{rothe::Permutation::parse(text)};
    return ROTHE_OK;
  });
}

rothe_status rothe_perm_from_word(const unsigned *word, size_t n,
                                  rothe_perm **out) {
  if (!word && n > 0)
    return null_argument("word");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = new rothe_perm{rothe::Permutation::from_one_line(
        std::span<const unsigned>(word, n))};
    return ROTHE_OK;
  });
}

void rothe_perm_free(rothe_perm *w) { delete w; }

size_t rothe_perm_size(const rothe_perm *w) { return w ? w->value.size() : 0; }

unsigned rothe_perm_length(const rothe_perm *w) {
  return w ? w->value.length() : 0;
}

rothe_status rothe_perm_contains(const rothe_perm *w, const rothe_perm *pattern,
                                 int *out) {
  if (!w)
    return null_argument("w");
  if (!pattern)
    return null_argument("pattern");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = rothe::contains_pattern(w->value, pattern->value) ? 1 : 0;
    return ROTHE_OK;
  });
}

rothe_status rothe_compute(const rothe_perm *w, const char *family,
                           const char *method, rothe_poly **out,
                           unsigned *warnings) {
  if (!w)
    return null_argument("w");
  if (!family)
    return null_argument("family");
  if (!method)
    return null_argument("method");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    auto doc = rothe::compute(w->value, rothe::parse_family(family),
                              rothe::parse_method(method));
    if (warnings) {
      *warnings = 0;
      for (const auto &name : doc.warnings)
        if (name == rothe::kWarningOutsideClass)
          *warnings |= ROTHE_WARNING_OUTSIDE_CLASS;
    }
    *out = new rothe_poly{std::move(doc.polynomial)};
    return ROTHE_OK;
  });
}

rothe_status rothe_compute_document(const rothe_perm *w, const char *family,
                                    const char *method, rothe_format format,
                                    char **out) {
  if (!w)
    return null_argument("w");
  if (!family)
    return null_argument("family");
  if (!method)
    return null_argument("method");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    const auto fmt = format_from(format);
    const auto doc = rothe::compute(w->value, rothe::parse_family(family),
                                    rothe::parse_method(method));
    *out = copy_string(rothe::render(doc, fmt));
    return ROTHE_OK;
  });
}

void rothe_poly_free(rothe_poly *p) { delete p; }

size_t rothe_poly_term_count(const rothe_poly *p) {
  return p ? p->value.size() : 0;
}

rothe_status rothe_poly_to_string(const rothe_poly *p, char **out) {
  if (!p)
    return null_argument("p");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = copy_string(p->value.to_string());
    return ROTHE_OK;
  });
}

rothe_status rothe_poly_equal(const rothe_poly *a, const rothe_poly *b,
                              int *out) {
  if (!a)
    return null_argument("a");
  if (!b)
    return null_argument("b");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = a->value == b->value ? 1 : 0;
    return ROTHE_OK;
  });
}

rothe_status rothe_document_parse(const char *line, rothe_poly **out) {
  if (!line)
    return null_argument("line");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = new rothe_poly{rothe::parse_document(line).polynomial};
    return ROTHE_OK;
  });
}

void rothe_string_free(char *s) { delete[] s; }

rothe_status rothe_enumerate(const rothe_perm *w, const char *kind,
                             rothe_format format, unsigned max_ground_set,
                             rothe_line_fn emit, void *user, size_t *count) {
  if (!w)
    return null_argument("w");
  if (!kind)
    return null_argument("kind");
  return guarded([&] {
    const auto n = rothe::enumerate(w->value, rothe::parse_kind(kind),
                                    format_from(format), max_ground_set,
                                    sink(emit, user));
    if (count)
      *count = n;
    return ROTHE_OK;
  });
}

rothe_status rothe_count(const rothe_perm *w, const char *kind,
                         unsigned max_ground_set, size_t *out) {
  if (!w)
    return null_argument("w");
  if (!kind)
    return null_argument("kind");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = rothe::count_objects(w->value, rothe::parse_kind(kind),
                                max_ground_set);
    return ROTHE_OK;
  });
}

rothe_status rothe_count_avoiders(unsigned n, const rothe_perm *pattern,
                                  uint64_t *out) {
  if (!pattern)
    return null_argument("pattern");
  if (!out)
    return null_argument("out");
  return guarded([&] {
    *out = rothe::count_avoiders(n, pattern->value);
    return ROTHE_OK;
  });
}

rothe_status rothe_verify(unsigned n, const char *suite, rothe_format format,
                          unsigned jobs, unsigned max_ground_set,
                          rothe_line_fn emit, void *user,
                          rothe_verify_summary *summary) {
  if (!suite)
    return null_argument("suite");
  return guarded([&] {
    rothe::VerifyOptions options;
    options.format = format_from(format);
    options.jobs = jobs == 0 ? 1 : jobs;
    options.max_ground_set = max_ground_set;
    const auto result =
        rothe::verify(n, rothe::parse_suite(suite), options, sink(emit, user));
    if (summary) {
      summary->pass = result.pass;
      summary->fail = result.fail;
      summary->skip = result.skip;
    }
    if (result.fail > 0)
      return fail(ROTHE_ERR_VERIFICATION_FAILED,
                  std::to_string(result.fail) + " item(s) failed");
    return ROTHE_OK;
  });
}

} // extern "C"
