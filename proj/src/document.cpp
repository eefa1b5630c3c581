#include "rothe/document.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

#include "rothe/error.hpp"
#include "rothe/oracle.hpp"

namespace rothe {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::array<const char *, 4> kFamilies = {
    "grothendieck-double", "grothendieck-single", "schubert-double",
    "schubert-single"};
constexpr std::array<const char *, 8> kMethods = {
    "oracle",       "theorem11", "theorem14-limit", "theorem14-srt",
    "matsumura321", "fgrs",      "corollary12",     "corollary13"};
constexpr std::array<const char *, 2> kFormats = {"json-lines", "pretty"};

template <class E, std::size_t N>
E parse_name(const std::array<const char *, N> &names, const std::string &text,
             const char *what) {
  for (std::size_t k = 0; k < N; ++k)
    if (text == names[k])
      return static_cast<E>(k);
  std::string known;
  for (auto n : names)
    known += std::string(known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::InvalidArgument,
              "unknown " + std::string(what) + " '" + text + "' (one of " +
                  known + ")");
}

Json coefficient_json(const Integer &c) {
  if (c.fits_int64())
    return c.to_int64();
  return c.to_string();
}

Integer coefficient_from(const Json &j) {
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  throw Error(ErrorCode::ParseError, "coefficient must be an integer");
}

std::string square_text(Square s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

} // namespace

std::string to_string(Family f) { return kFamilies[static_cast<int>(f)]; }
std::string to_string(Method m) { return kMethods[static_cast<int>(m)]; }
std::string to_string(Format f) { return kFormats[static_cast<int>(f)]; }

Family parse_family(const std::string &text) {
  return parse_name<Family>(kFamilies, text, "family");
}

Method parse_method(const std::string &text) {
  return parse_name<Method>(kMethods, text, "method");
}

Format parse_format(const std::string &text) {
  return parse_name<Format>(kFormats, text, "format");
}

std::string to_json_line(const PolynomialDocument &doc) {
  const Ring ring = doc.polynomial.ring();
  Json terms = Json::array();
  for (const auto &t : doc.polynomial.terms()) {
    Json x = Json::array(), y = Json::array();
    for (unsigned i = 1; i <= ring.nx; ++i)
      x.push_back(doc.polynomial.x_exponent(t.monomial, i));
    for (unsigned j = 1; j <= ring.ny; ++j)
      y.push_back(doc.polynomial.y_exponent(t.monomial, j));
    Json term;
    term["coefficient"] = coefficient_json(t.coefficient);
    term["xExponents"] = std::move(x);
    term["yExponents"] = std::move(y);
    terms.push_back(std::move(term));
  }
  Json out;
  out["permutation"] = doc.permutation.to_string();
  out["family"] = to_string(doc.family);
  out["method"] = to_string(doc.method);
  out["warnings"] = doc.warnings;
  out["terms"] = std::move(terms);
  return out.dump();
}

std::string to_pretty(const PolynomialDocument &doc) {
  std::ostringstream os;
  os << "permutation: " << doc.permutation.to_string() << '\n'
     << "family: " << to_string(doc.family) << '\n'
     << "method: " << to_string(doc.method) << '\n';
  for (const auto &w : doc.warnings)
    os << "warning: " << w << '\n';
  os << "terms: " << doc.polynomial.size() << '\n'
     << doc.polynomial.to_string();
  return os.str();
}

std::string render(const PolynomialDocument &doc, Format format) {
  return format == Format::JsonLines ? to_json_line(doc) : to_pretty(doc);
}

PolynomialDocument parse_document(const std::string &line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    PolynomialDocument doc{
        Permutation::parse(j.at("permutation").get<std::string>()),
        parse_family(j.at("family").get<std::string>()),
        parse_method(j.at("method").get<std::string>()),
        j.at("warnings").get<std::vector<std::string>>(),
        {}};
    const Ring ring = ring_for(doc.permutation.size());
    std::vector<Term> terms;
    for (const auto &t : j.at("terms")) {
      const auto x = t.at("xExponents").get<std::vector<unsigned>>();
      const auto y = t.at("yExponents").get<std::vector<unsigned>>();
      if (x.size() != ring.nx || y.size() != ring.ny)
        throw Error(ErrorCode::ParseError,
                    "exponent lists do not match the permutation size");
      Term term{{}, coefficient_from(t.at("coefficient"))};
      if (term.coefficient.is_zero())
        throw Error(ErrorCode::ParseError, "zero coefficient in document");
      for (unsigned i = 0; i < ring.nx; ++i)
        term.monomial.exps[i] = static_cast<std::uint8_t>(x[i]);
      for (unsigned i = 0; i < ring.ny; ++i)
        term.monomial.exps[ring.nx + i] = static_cast<std::uint8_t>(y[i]);
      for (unsigned e : x)
        if (e > 255)
          throw Error(ErrorCode::ParseError, "exponent above 255");
      for (unsigned e : y)
        if (e > 255)
          throw Error(ErrorCode::ParseError, "exponent above 255");
      terms.push_back(std::move(term));
    }
    doc.polynomial = Polynomial::from_terms(ring, std::move(terms));
    return doc;
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::ParseError)
      throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string render_tableau(const Permutation &w, const std::string &kind,
                           const SetValuedTableau &t, Format format) {
  const auto &sq = t.shape.squares();
  if (format == Format::JsonLines) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < sq.size(); ++k) {
      Json e;
      e["square"] = {sq[k].row, sq[k].col};
      e["values"] = entry_values(t.entries[k]);
      entries.push_back(std::move(e));
    }
    Json out;
    out["permutation"] = w.to_string();
    out["kind"] = kind;
    out["entries"] = std::move(entries);
    return out.dump();
  }
  if (sq.empty())
    return "(empty)";
  std::ostringstream os;
  for (std::size_t k = 0; k < sq.size(); ++k)
    os << (k ? " " : "") << square_text(sq[k]) << '='
       << entry_to_string(t.entries[k]);
  return os.str();
}

std::string render_labeling(const Permutation &w, const Labeling &l,
                            Format format) {
  const auto &sq = l.shape.squares();
  if (format == Format::JsonLines) {
    Json labels = Json::array();
    for (std::size_t k = 0; k < sq.size(); ++k) {
      Json e;
      e["square"] = {sq[k].row, sq[k].col};
      e["label"] = l.labels[k];
      labels.push_back(std::move(e));
    }
    Json out;
    out["permutation"] = w.to_string();
    out["kind"] = "csbl";
    out["labels"] = std::move(labels);
    return out.dump();
  }
  if (sq.empty())
    return "(empty)";
  std::ostringstream os;
  for (std::size_t k = 0; k < sq.size(); ++k)
    os << (k ? " " : "") << square_text(sq[k]) << '=' << l.labels[k];
  return os.str();
}

} // namespace rothe
