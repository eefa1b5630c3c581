#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "rothe/complex.hpp"
#include "rothe/document.hpp"
#include "rothe/permutation.hpp"

namespace rothe {

/// Largest n for which the operator oracle is run.
inline constexpr unsigned kOracleMaxN = 6;

/// Evaluates `method` for `family`. Formulas outside their pattern class are
/// still evaluated and carry kWarningOutsideClass. Throws
/// MethodNotApplicable for pairs that do not compute the family and for
/// matsumura321 on a permutation containing 321; ResourceCap when the
/// oracle is asked for n > kOracleMaxN.
PolynomialDocument compute(const Permutation &w, Family family,
                           Method method);

enum class EnumerationKind { Svrt, Srt, Lsvrt, Csbl, Faces };

std::string to_string(EnumerationKind k);
/// Throws InvalidArgument.
EnumerationKind parse_kind(const std::string &text);

using LineSink = std::function<void(const std::string &)>;

/// Emits one record per object in canonical order and returns the count.
/// Faces throw GroundSetTooLarge beyond `max_ground_set`.
std::size_t enumerate(const Permutation &w, EnumerationKind kind,
                      Format format, unsigned max_ground_set,
                      const LineSink &emit);

/// Number of objects `enumerate` would emit.
std::size_t count_objects(const Permutation &w, EnumerationKind kind,
                          unsigned max_ground_set);

/// |{w in S_n avoiding pattern}|. Throws ResourceCap for n > 10.
std::uint64_t count_avoiders(unsigned n, const Permutation &pattern);

enum class Suite {
  Theorem11,
  Theorem14,
  Matsumura,
  Fgrs,
  Theorem41,
  Kpoly,
  Lemma41,
  WilfCounts,
};

std::string to_string(Suite s);
/// Throws InvalidArgument.
Suite parse_suite(const std::string &text);
/// Largest n accepted by `verify` for the suite.
unsigned suite_max_n(Suite s);

struct VerifyOptions {
  Format format = Format::JsonLines;
  unsigned jobs = 1;
  unsigned max_ground_set = kDefaultMaxGroundSet;
};

struct VerifySummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

/// Exhaustive check over S_n (or the suite's own item list). Emits one
/// record per item in lexicographic order followed by a summary record.
/// Throws ResourceCap when n exceeds suite_max_n.
VerifySummary verify(unsigned n, Suite suite, const VerifyOptions &options,
                     const LineSink &emit);

} // namespace rothe
