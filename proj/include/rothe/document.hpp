#pragma once

#include <string>
#include <vector>

#include "rothe/balanced.hpp"
#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"
#include "rothe/tableaux.hpp"

namespace rothe {

enum class Family {
  GrothendieckDouble,
  GrothendieckSingle,
  SchubertDouble,
  SchubertSingle,
};

enum class Method {
  Oracle,
  Theorem11,
  Theorem14Limit,
  Theorem14Srt,
  Matsumura321,
  Fgrs,
  Corollary12,
  Corollary13,
};

enum class Format { JsonLines, Pretty };

/// "grothendieck-double" etc. Parsing throws InvalidArgument.
std::string to_string(Family f);
std::string to_string(Method m);
std::string to_string(Format f);
Family parse_family(const std::string &text);
Method parse_method(const std::string &text);
Format parse_format(const std::string &text);

inline constexpr const char *kWarningOutsideClass = "not-equal-to-oracle-class";

struct PolynomialDocument {
  Permutation permutation;
  Family family = Family::GrothendieckDouble;
  Method method = Method::Oracle;
  std::vector<std::string> warnings;
  Polynomial polynomial;
};

/// One JSON object with the fields permutation, family, method, warnings,
/// terms (in that order). Coefficients outside int64 are written as strings.
std::string to_json_line(const PolynomialDocument &doc);
/// A few "key: value" lines and the polynomial in monomial notation.
std::string to_pretty(const PolynomialDocument &doc);
std::string render(const PolynomialDocument &doc, Format format);

/// Inverse of to_json_line. Throws ParseError.
PolynomialDocument parse_document(const std::string &line);

/// Tableaux and labelings, one record each.
std::string render_tableau(const Permutation &w, const std::string &kind,
                           const SetValuedTableau &t, Format format);
std::string render_labeling(const Permutation &w, const Labeling &l,
                            Format format);

} // namespace rothe
