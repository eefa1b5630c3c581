// Command-line front end over the C interface.
//
//   rothe compute 132 --family grothendieck-double --method oracle
//   rothe enumerate 426315 --kind svrt --format pretty
//   rothe verify 5 theorem11 --jobs 4
//   rothe count 132 --kind lsvrt
//   rothe count --n 7 --avoid 1432

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rothe/rothe.h"

namespace {

enum Exit {
  kOk = 0,
  kOther = 1,
  kUsage = 2,
  kNotApplicable = 3,
  kVerificationFailed = 4,
  kResourceCap = 5,
};

int exit_code(rothe_status s) {
  switch (s) {
  case ROTHE_OK:
    return kOk;
  case ROTHE_ERR_INVALID_ARGUMENT:
  case ROTHE_ERR_DUPLICATE_VALUE:
  case ROTHE_ERR_OUT_OF_RANGE:
  case ROTHE_ERR_PARSE:
    return kUsage;
  case ROTHE_ERR_METHOD_NOT_APPLICABLE:
    return kNotApplicable;
  case ROTHE_ERR_VERIFICATION_FAILED:
    return kVerificationFailed;
  case ROTHE_ERR_GROUND_SET_TOO_LARGE:
  case ROTHE_ERR_RESOURCE_CAP:
    return kResourceCap;
  case ROTHE_ERR_INTERNAL:
    return kOther;
  }
  return kOther;
}

int report(rothe_status s) {
  if (s != ROTHE_OK)
    std::cerr << "rothe: " << rothe_status_name(s) << ": "
              << rothe_last_error() << '\n';
  return exit_code(s);
}

void print_line(const char *line, void *) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
}

rothe_format format_of(const std::string &name) {
  return name == "pretty" ? ROTHE_FORMAT_PRETTY : ROTHE_FORMAT_JSON_LINES;
}

/// Owns a rothe_perm parsed from text.
struct Perm {
  rothe_perm *ptr = nullptr;
  ~Perm() { rothe_perm_free(ptr); }
  rothe_status parse(const std::string &text) {
    return rothe_perm_parse(text.c_str(), &ptr);
  }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Grothendieck and Schubert polynomials from Rothe tableaux"};
  app.require_subcommand(1);

  std::string format = "json-lines";
  unsigned max_ground_set = 20;
  unsigned jobs = 1;
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json-lines", "pretty"}))
        ->capture_default_str();
  };
  auto add_ground_set = [&](CLI::App *cmd) {
    cmd->add_option("--max-ground-set", max_ground_set,
                    "Largest ground set |E| for subset enumeration")
        ->check(CLI::Range(0u, 32u))
        ->capture_default_str();
  };

  std::string perm_text, family = "grothendieck-double", method = "oracle";
  auto *compute = app.add_subcommand("compute", "Compute one polynomial");
  compute->add_option("permutation", perm_text, "One-line notation")
      ->required();
  compute->add_option("--family", family, "Polynomial family")
      ->check(CLI::IsMember({"grothendieck-double", "grothendieck-single",
                             "schubert-double", "schubert-single"}))
      ->capture_default_str();
  compute->add_option("--method", method, "Evaluation method")
      ->check(CLI::IsMember({"oracle", "theorem11", "theorem14-limit",
                             "theorem14-srt", "matsumura321", "fgrs",
                             "corollary12", "corollary13"}))
      ->capture_default_str();
  add_format(compute);

  std::string kind = "svrt";
  auto *enumerate =
      app.add_subcommand("enumerate", "List tableaux, labelings or faces");
  enumerate->add_option("permutation", perm_text, "One-line notation")
      ->required();
  enumerate->add_option("--kind", kind, "Object kind")
      ->check(CLI::IsMember({"svrt", "srt", "lsvrt", "csbl", "faces"}))
      ->capture_default_str();
  add_format(enumerate);
  add_ground_set(enumerate);

  std::vector<std::string> verify_args;
  unsigned n = 0;
  auto *verify = app.add_subcommand("verify", "Exhaustive check over S_n");
  verify->add_option("args", verify_args, "[n] suite")->expected(1, 2);
  verify->add_option("--n", n, "Permutation size");
  verify->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  add_format(verify);
  add_ground_set(verify);

  std::string avoid;
  auto *count = app.add_subcommand(
      "count", "Count objects of a permutation, or pattern avoiders in S_n");
  count->add_option("permutation", perm_text, "One-line notation");
  count->add_option("--kind", kind, "Object kind")
      ->check(CLI::IsMember({"svrt", "srt", "lsvrt", "csbl", "faces"}))
      ->capture_default_str();
  count->add_option("--n", n, "Permutation size for --avoid");
  count->add_option("--avoid", avoid, "Pattern to avoid");
  add_ground_set(count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (compute->parsed()) {
    Perm w;
    if (auto s = w.parse(perm_text))
      return report(s);
    char *doc = nullptr;
    auto s = rothe_compute_document(w.ptr, family.c_str(), method.c_str(),
                                    format_of(format), &doc);
    if (s != ROTHE_OK)
      return report(s);
    std::cout << doc << '\n';
    rothe_string_free(doc);
    return kOk;
  }

  if (enumerate->parsed()) {
    Perm w;
    if (auto s = w.parse(perm_text))
      return report(s);
    return report(rothe_enumerate(w.ptr, kind.c_str(), format_of(format),
                                  max_ground_set, print_line, nullptr,
                                  nullptr));
  }

  if (verify->parsed()) {
    std::string suite = verify_args.back();
    if (verify_args.size() == 2) {
      try {
        n = static_cast<unsigned>(std::stoul(verify_args.front()));
      } catch (const std::exception &) {
        std::cerr << "rothe: verify: n must be a positive integer\n";
        return kUsage;
      }
    }
    if (n == 0) {
      std::cerr << "rothe: verify: give n as --n N or as the first argument\n";
      return kUsage;
    }
    std::fflush(stdout);
    return report(rothe_verify(n, suite.c_str(), format_of(format), jobs,
                               max_ground_set, print_line, nullptr, nullptr));
  }

  if (count->parsed()) {
    if (!avoid.empty()) {
      if (!perm_text.empty() || n == 0) {
        std::cerr << "rothe: count: use either <permutation> --kind K or "
                     "--n N --avoid P\n";
        return kUsage;
      }
      Perm pattern;
      if (auto s = pattern.parse(avoid))
        return report(s);
      uint64_t total = 0;
      if (auto s = rothe_count_avoiders(n, pattern.ptr, &total))
        return report(s);
      std::cout << total << '\n';
      return kOk;
    }
    if (perm_text.empty()) {
      std::cerr << "rothe: count: a permutation or --avoid is required\n";
      return kUsage;
    }
    Perm w;
    if (auto s = w.parse(perm_text))
      return report(s);
    size_t total = 0;
    if (auto s = rothe_count(w.ptr, kind.c_str(), max_ground_set, &total))
      return report(s);
    std::cout << total << '\n';
    return kOk;
  }
  return kUsage;
}
