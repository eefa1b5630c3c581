#include "rothe/commands.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "rothe/balanced.hpp"
#include "rothe/error.hpp"
#include "rothe/oracle.hpp"
#include "rothe/tableaux.hpp"

namespace rothe {

using Json = nlohmann::ordered_json;

namespace {

const Permutation &pattern_1432() {
  static const Permutation p =
      Permutation::from_one_line(std::vector<unsigned>{1, 4, 3, 2});
  return p;
}

const Permutation &pattern_2143() {
  static const Permutation p =
      Permutation::from_one_line(std::vector<unsigned>{2, 1, 4, 3});
  return p;
}

const Permutation &pattern_321() {
  static const Permutation p = Permutation::longest(3);
  return p;
}

[[noreturn]] void not_applicable(Family family, Method method) {
  throw Error(ErrorCode::MethodNotApplicable,
              "method " + to_string(method) + " does not compute " +
                  to_string(family));
}

std::size_t ground_set_size(const Permutation &w) {
  std::size_t total = 0;
  for (auto e : escape_sets(w))
    total += entry_count(e);
  return total;
}

void check_ground_set(const Permutation &w, unsigned max_ground_set) {
  const auto size = ground_set_size(w);
  if (size > max_ground_set)
    throw Error(ErrorCode::GroundSetTooLarge,
                "ground set of " + w.to_string() + " has " +
                    std::to_string(size) + " elements (limit " +
                    std::to_string(max_ground_set) + ")");
}

template <class F> void parallel_for(std::size_t count, unsigned jobs, F &&body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        body(i);
    });
  for (auto &w : workers)
    w.join();
}

} // namespace

// compute ------------------------------------------------------------------

PolynomialDocument compute(const Permutation &w, Family family,
                           Method method) {
  PolynomialDocument doc{w, family, method, {}, {}};
  const bool avoids_1432 = !contains_pattern(w, pattern_1432());
  auto flag_outside = [&] {
    if (!avoids_1432)
      doc.warnings.push_back(kWarningOutsideClass);
  };
  auto double_or_single = [&](Polynomial p) {
    if (family == Family::GrothendieckDouble)
      return p;
    if (family == Family::GrothendieckSingle)
      return set_y_zero(p);
    not_applicable(family, method);
  };

  switch (method) {
  case Method::Oracle: {
    if (w.size() > kOracleMaxN)
      throw Error(ErrorCode::ResourceCap,
                  "the oracle is limited to n <= " +
                      std::to_string(kOracleMaxN));
    GrothendieckOracle oracle(w.size());
    switch (family) {
    case Family::GrothendieckDouble:
      doc.polynomial = oracle.double_grothendieck(w);
      break;
    case Family::GrothendieckSingle:
      doc.polynomial = oracle.single_grothendieck(w);
      break;
    case Family::SchubertDouble:
      doc.polynomial = oracle.double_schubert(w);
      break;
    case Family::SchubertSingle:
      doc.polynomial = oracle.single_schubert(w);
      break;
    }
    break;
  }
  case Method::Theorem11:
    doc.polynomial = double_or_single(formula_theorem11(w));
    flag_outside();
    break;
  case Method::Theorem14Limit:
    doc.polynomial = double_or_single(formula_theorem14_limit(w));
    flag_outside();
    break;
  case Method::Theorem14Srt:
    doc.polynomial = double_or_single(formula_theorem14_srt(w));
    flag_outside();
    break;
  case Method::Matsumura321:
    if (family != Family::GrothendieckDouble &&
        family != Family::GrothendieckSingle)
      not_applicable(family, method);
    if (contains_pattern(w, pattern_321()))
      throw Error(ErrorCode::MethodNotApplicable,
                  "matsumura321 needs a 321-avoiding permutation; " +
                      w.to_string() + " contains 321");
    doc.polynomial = double_or_single(formula_matsumura_321(w));
    break;
  case Method::Fgrs:
    if (family != Family::SchubertSingle)
      not_applicable(family, method);
    doc.polynomial = fgrs_schubert(w);
    break;
  case Method::Corollary12:
    if (family != Family::GrothendieckSingle)
      not_applicable(family, method);
    doc.polynomial = formula_corollary12(w);
    flag_outside();
    break;
  case Method::Corollary13:
    if (family == Family::SchubertDouble)
      doc.polynomial = formula_corollary13_double(w);
    else if (family == Family::SchubertSingle)
      doc.polynomial = formula_corollary13_single(w);
    else
      not_applicable(family, method);
    flag_outside();
    break;
  }
  return doc;
}

// enumerate ----------------------------------------------------------------

namespace {

constexpr std::array<const char *, 5> kKinds = {"svrt", "srt", "lsvrt",
                                                "csbl", "faces"};

template <class Visit>
void visit_objects(const Permutation &w, EnumerationKind kind,
                   unsigned max_ground_set, Format format, Visit &&visit) {
  const auto name = to_string(kind);
  switch (kind) {
  case EnumerationKind::Svrt:
  case EnumerationKind::Srt: {
    const RotheCells cells(w);
    auto each = [&](const std::vector<EntrySet> &e) {
      visit([&] {
        return render_tableau(w, name, SetValuedTableau{cells.diagram, e},
                              format);
      });
    };
    if (kind == EnumerationKind::Svrt)
      for_each_svrt(cells, each);
    else
      for_each_srt(cells, each);
    break;
  }
  case EnumerationKind::Lsvrt:
    check_ground_set(w, max_ground_set);
    for (const auto &t : enumerate_lsvrt(w))
      visit([&] { return render_tableau(w, name, t, format); });
    break;
  case EnumerationKind::Csbl:
    for (const auto &l : enumerate_csbl(w))
      visit([&] { return render_labeling(w, l, format); });
    break;
  case EnumerationKind::Faces: {
    const auto c = build_rothe_complex(w);
    for (const auto &f : faces(c, max_ground_set))
      visit([&] { return render_tableau(w, name, f, format); });
    break;
  }
  }
}

} // namespace

std::string to_string(EnumerationKind k) {
  return kKinds[static_cast<int>(k)];
}

EnumerationKind parse_kind(const std::string &text) {
  for (std::size_t k = 0; k < kKinds.size(); ++k)
    if (text == kKinds[k])
      return static_cast<EnumerationKind>(k);
  throw Error(ErrorCode::InvalidArgument,
              "unknown kind '" + text +
                  "' (one of svrt, srt, lsvrt, csbl, faces)");
}

std::size_t enumerate(const Permutation &w, EnumerationKind kind,
                      Format format, unsigned max_ground_set,
                      const LineSink &emit) {
  std::size_t count = 0;
  visit_objects(w, kind, max_ground_set, format, [&](auto &&line) {
    emit(line());
    ++count;
  });
  if (format == Format::JsonLines) {
    Json trailer;
    trailer["count"] = count;
    emit(trailer.dump());
  } else {
    emit("count: " + std::to_string(count));
  }
  return count;
}

std::size_t count_objects(const Permutation &w, EnumerationKind kind,
                          unsigned max_ground_set) {
  std::size_t count = 0;
  visit_objects(w, kind, max_ground_set, Format::JsonLines,
                [&](auto &&) { ++count; });
  return count;
}

std::uint64_t count_avoiders(unsigned n, const Permutation &pattern) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > 10)
    throw Error(ErrorCode::ResourceCap, "avoider counts are limited to n <= 10");
  std::vector<unsigned> word(n);
  for (unsigned i = 0; i < n; ++i)
    word[i] = i + 1;
  std::uint64_t count = 0;
  do {
    if (!contains_pattern(Permutation::from_one_line(word), pattern))
      ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

// verify -------------------------------------------------------------------

namespace {

constexpr std::array<const char *, 8> kSuites = {
    "theorem11", "theorem14", "matsumura", "fgrs",
    "theorem41", "kpoly",     "lemma41",   "wilf-counts"};
constexpr std::array<unsigned, 8> kSuiteMaxN = {6, 6, 6, 6, 6, 5, 8, 9};

enum class Status { Pass, Fail, Skip };

struct Record {
  std::vector<unsigned> order;
  std::string item;
  Status status = Status::Pass;
  std::string detail;
};

const char *status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skip:
    return "skip";
  }
  return "fail";
}

Record record_for(const Permutation &w) {
  return Record{w.word(), w.to_string(), Status::Pass, {}};
}

Record verdict(Record r, bool ok, const std::string &detail) {
  r.status = ok ? Status::Pass : Status::Fail;
  r.detail = detail;
  return r;
}

Record skipped(Record r, const std::string &detail) {
  r.status = Status::Skip;
  r.detail = detail;
  return r;
}

using Check = std::function<Record(const Permutation &, const Polynomial &)>;

/// Runs `check` on every permutation with its oracle polynomial, in batches
/// so at most a few hundred oracle polynomials are alive at once.
std::vector<Record> oracle_sweep(unsigned n, bool grothendieck, unsigned jobs,
                                 const Check &check) {
  std::vector<Record> out;
  std::vector<std::pair<Permutation, Polynomial>> batch;
  auto flush = [&] {
    std::vector<Record> results(batch.size());
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
      try {
        results[i] = check(batch[i].first, batch[i].second);
      } catch (const std::exception &e) {
        results[i] = verdict(record_for(batch[i].first), false,
                             std::string("error: ") + e.what());
      }
    });
    for (auto &r : results)
      out.push_back(std::move(r));
    batch.clear();
  };
  auto visit = [&](const Permutation &w, const Polynomial &g) {
    batch.emplace_back(w, g);
    if (batch.size() >= 64 * std::max(1u, jobs))
      flush();
  };
  if (grothendieck)
    sweep_double_grothendieck(n, visit);
  else
    sweep_double_schubert(n, visit);
  flush();
  return out;
}

std::vector<Record> permutation_sweep(
    unsigned n, unsigned jobs,
    const std::function<Record(const Permutation &)> &check) {
  const auto perms = all_permutations(n);
  std::vector<Record> out(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = check(perms[i]);
    } catch (const std::exception &e) {
      out[i] = verdict(record_for(perms[i]), false,
                       std::string("error: ") + e.what());
    }
  });
  return out;
}

std::vector<Record> run_suite(unsigned n, Suite suite,
                              const VerifyOptions &options) {
  const unsigned jobs = options.jobs;
  switch (suite) {
  case Suite::Theorem11:
    return oracle_sweep(n, true, jobs, [](const Permutation &w,
                                          const Polynomial &g) {
      const bool avoids = !contains_pattern(w, pattern_1432());
      const bool equal = formula_theorem11(w) == g;
      return verdict(record_for(w), equal == avoids,
                     std::string(equal ? "equal" : "unequal") +
                         (avoids ? ", avoids 1432" : ", contains 1432"));
    });

  case Suite::Theorem14:
    return oracle_sweep(n, true, jobs, [&](const Permutation &w,
                                           const Polynomial &g) {
      if (contains_pattern(w, pattern_1432()))
        return skipped(record_for(w), "contains 1432");
      const auto size = ground_set_size(w);
      if (size > options.max_ground_set)
        return skipped(record_for(w),
                       "ground set " + std::to_string(size) + " over limit");
      const bool limit = formula_theorem14_limit(w) == g;
      const bool srt = formula_theorem14_srt(w) == g;
      return verdict(record_for(w), limit && srt,
                     std::string("limit ") + (limit ? "equal" : "unequal") +
                         ", srt " + (srt ? "equal" : "unequal"));
    });

  case Suite::Matsumura:
    return oracle_sweep(n, true, jobs, [](const Permutation &w,
                                          const Polynomial &g) {
      if (contains_pattern(w, pattern_321()))
        return skipped(record_for(w), "contains 321");
      const bool m = formula_matsumura_321(w) == g;
      const bool t = formula_theorem11(w) == g;
      const auto bad = index_identity_violations(w);
      return verdict(record_for(w), m && t && bad.empty(),
                     std::string("skew ") + (m ? "equal" : "unequal") +
                         ", rothe " + (t ? "equal" : "unequal") +
                         ", index identity " +
                         (bad.empty() ? "holds" : "fails"));
    });

  case Suite::Fgrs:
    return oracle_sweep(n, false, jobs, [](const Permutation &w,
                                           const Polynomial &s) {
      const bool equal = fgrs_schubert(w) == set_y_zero(s);
      return verdict(record_for(w), equal, equal ? "equal" : "unequal");
    });

  case Suite::Theorem41:
    return oracle_sweep(n, false, jobs, [](const Permutation &w,
                                           const Polynomial &s) {
      const bool single = formula_corollary13_single(w) == set_y_zero(s);
      if (!contains_pattern(w, pattern_1432())) {
        const bool dbl = formula_corollary13_double(w) == s;
        return verdict(record_for(w), single && dbl,
                       std::string("avoids 1432, single ") +
                           (single ? "equal" : "unequal") + ", double " +
                           (dbl ? "equal" : "unequal"));
      }
      counterexample_labeling(w);
      return verdict(record_for(w), !single,
                     std::string("contains 1432, single ") +
                         (single ? "equal" : "unequal") +
                         ", counterexample labeling in CSBL minus SRT");
    });

  case Suite::Kpoly:
    return permutation_sweep(n, jobs, [&](const Permutation &w) {
      const auto c = build_rothe_complex(w);
      if (c.vertices.size() > options.max_ground_set)
        return skipped(record_for(w), "ground set " +
                                          std::to_string(c.vertices.size()) +
                                          " over limit");
      const auto def = k_poly_definition(c, options.max_ground_set);
      const auto f1 = kmy_formula1(c);
      const auto f2 = kmy_formula2(c, options.max_ground_set);
      const auto f3 = kmy_formula3(c);
      const bool same = def == f1 && f1 == f2 && f2 == f3;
      const bool bridge =
          specialize_vertices(c, f1) == formula_theorem11(w) &&
          specialize_vertices(c, f2) == formula_theorem14_limit(w) &&
          specialize_vertices(c, f3) == formula_theorem14_srt(w);
      const bool facets = kmy_tableaux(c) == c.facets;
      const auto chi = reduced_euler_characteristic(c, options.max_ground_set);
      return verdict(record_for(w),
                     same && bridge && facets && chi >= -1 && chi <= 1,
                     std::string("formulas ") + (same ? "agree" : "differ") +
                         ", substitution " + (bridge ? "agrees" : "differs") +
                         ", facets " + (facets ? "match" : "differ") +
                         ", reduced euler characteristic " +
                         std::to_string(chi));
    });

  case Suite::Lemma41: {
    std::vector<Record> out;
    const Ring ring{std::max(n, 2u), 4};
    std::vector<unsigned> a;
    auto check = [&](unsigned r) {
      auto lhs = Polynomial::constant(ring, 1);
      for (unsigned v : a)
        lhs *= oplus(Polynomial::x(ring, r), Polynomial::y(ring, v));
      lhs = isobaric(lhs, r);
      const auto rhs = lemma41_rhs(ring, r, a);
      std::string item = "r=" + std::to_string(r) + " a=(";
      for (std::size_t k = 0; k < a.size(); ++k)
        item += (k ? "," : "") + std::to_string(a[k]);
      item += ")";
      const bool equal = lhs == rhs;
      const bool symmetric = swap_x(rhs, r) == rhs;
      out.push_back(verdict(Record{{}, item, Status::Pass, {}},
                            equal && symmetric,
                            std::string(equal ? "equal" : "unequal") +
                                (symmetric ? ", symmetric" : ", asymmetric")));
    };
    auto extend = [&](auto &self, unsigned r) -> void {
      if (!a.empty())
        check(r);
      if (a.size() == 4)
        return;
      for (unsigned v = 1; v <= 4; ++v) {
        a.push_back(v);
        self(self, r);
        a.pop_back();
      }
    };
    for (unsigned r = 1; r < n; ++r)
      extend(extend, r);
    return out;
  }

  case Suite::WilfCounts: {
    std::vector<Record> out;
    for (unsigned k = 1; k <= n; ++k) {
      const auto a = count_avoiders(k, pattern_1432());
      const auto b = count_avoiders(k, pattern_2143());
      out.push_back(verdict(Record{{k}, "n=" + std::to_string(k),
                                   Status::Pass, {}},
                            a == b,
                            "1432-avoiders " + std::to_string(a) +
                                ", 2143-avoiders " + std::to_string(b)));
    }
    return out;
  }
  }
  throw Error(ErrorCode::Internal, "unhandled suite");
}

} // namespace

std::string to_string(Suite s) { return kSuites[static_cast<int>(s)]; }

Suite parse_suite(const std::string &text) {
  for (std::size_t k = 0; k < kSuites.size(); ++k)
    if (text == kSuites[k])
      return static_cast<Suite>(k);
  std::string known;
  for (auto n : kSuites)
    known += std::string(known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::InvalidArgument,
              "unknown suite '" + text + "' (one of " + known + ")");
}

unsigned suite_max_n(Suite s) { return kSuiteMaxN[static_cast<int>(s)]; }

VerifySummary verify(unsigned n, Suite suite, const VerifyOptions &options,
                     const LineSink &emit) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > suite_max_n(suite))
    throw Error(ErrorCode::ResourceCap,
                "suite " + to_string(suite) + " is limited to n <= " +
                    std::to_string(suite_max_n(suite)));

  auto records = run_suite(n, suite, options);
  std::stable_sort(records.begin(), records.end(),
                   [](const Record &a, const Record &b) {
                     return a.order < b.order;
                   });

  VerifySummary summary;
  for (const auto &r : records) {
    switch (r.status) {
    case Status::Pass:
      ++summary.pass;
      break;
    case Status::Fail:
      ++summary.fail;
      break;
    case Status::Skip:
      ++summary.skip;
      break;
    }
    if (options.format == Format::JsonLines) {
      Json j;
      j["suite"] = to_string(suite);
      j["item"] = r.item;
      j["status"] = status_name(r.status);
      j["detail"] = r.detail;
      emit(j.dump());
    } else {
      emit(r.item + "  " + status_name(r.status) + "  " + r.detail);
    }
  }

  const char *result = summary.fail == 0 ? "PASS" : "FAIL";
  if (options.format == Format::JsonLines) {
    Json j;
    j["suite"] = to_string(suite);
    j["n"] = n;
    j["pass"] = summary.pass;
    j["fail"] = summary.fail;
    j["skip"] = summary.skip;
    j["result"] = result;
    emit(j.dump());
  } else {
    emit(to_string(suite) + " n=" + std::to_string(n) + ": " +
         std::to_string(summary.pass) + " pass, " +
         std::to_string(summary.fail) + " fail, " +
         std::to_string(summary.skip) + " skip, " + result);
  }
  return summary;
}

} // namespace rothe
