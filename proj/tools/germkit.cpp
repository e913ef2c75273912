// germkit: command line front end for the affine inverse semigroup toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "germkit/groupoid.hpp"
#include "germkit/oracle.hpp"
#include "germkit/profinite.hpp"
#include "germkit/quasilattice.hpp"
#include "germkit/text.hpp"
#include "germkit/verify.hpp"

namespace {

using namespace germkit;
using nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kParseError = 2;
constexpr int kCheckFailed = 3;

// Integers past 64 bits are emitted as decimal strings.
json num(const Int& a) {
  if (auto v = to_i64(a)) return *v;
  return to_string(a);
}

json to_json(const Projection& p) {
  if (p.is_zero()) return nullptr;
  return {{"shift", num(p.shift())}, {"modulus", num(p.modulus())}};
}

json to_json(const Element& v) {
  if (v.is_zero()) return nullptr;
  return {{"num", num(v.num())}, {"shift", num(v.shift())}, {"den", num(v.den())}, {"dom", to_json(v.dom())}};
}

json to_json(const TruncatedProfinite& r) { return {{"value", num(r.value())}, {"level", num(r.level())}}; }

json to_json(const Germ& g) {
  return {{"base", to_json(g.base())},
          {"k", num(g.g().k())},
          {"n", num(g.g().n())},
          {"m", num(g.g().m())}};
}

json to_json(const PElem& s) { return {{"k", num(s.k)}, {"m", num(s.m)}}; }

json to_json(const FilterSet& f) {
  json members = json::array();
  for (const auto& p : f.members) members.push_back(to_json(p));
  return {{"level", num(f.level)}, {"members", members}};
}

struct Out {
  bool as_json = false;

  template <class T>
  void value(const T& x) const {
    if (as_json) {
      std::cout << to_json(x).dump() << '\n';
    } else {
      std::cout << to_text(x) << '\n';
    }
  }

  void boolean(bool b) const {
    if (as_json) {
      std::cout << json(b).dump() << '\n';
    } else {
      std::cout << (b ? "true" : "false") << '\n';
    }
  }
};

std::vector<Projection> parse_family(const std::vector<std::string>& items) {
  std::vector<Projection> out;
  for (const auto& item : items) out.push_back(parse_projection(item));
  return out;
}

std::vector<PElem> parse_pfamily(const std::vector<std::string>& items) {
  std::vector<PElem> out;
  for (const auto& item : items) out.push_back(parse_pelem(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine inverse semigroup of Z and its germ groupoid"};
  app.require_subcommand(1);
  Out out;
  app.add_flag("--json", out.as_json, "Emit one canonical JSON object per line");

  std::string word, word2, pa, pb, zhat, germ_a, germ_b, target;
  std::string level_text, value_text;
  std::vector<std::string> family;
  std::vector<std::string> sigma_args;
  bool brute = false;
  std::int64_t window = 60;
  verify::Config config;
  std::int64_t trials = 0;
  std::string verify_level = "27720";

  auto* norm = app.add_subcommand("norm", "Normalize a generator word");
  norm->add_option("word", word, "Word such as \"s(2)* u(1) s(3)\"")->required();

  auto* meet_cmd = app.add_subcommand("meet", "Meet of two projections");
  meet_cmd->add_option("p", pa, "Projection p(shift,modulus)")->required();
  meet_cmd->add_option("q", pb, "Projection p(shift,modulus)")->required();

  auto* refine_cmd = app.add_subcommand("refine", "Split a projection into classes of a finer level");
  refine_cmd->add_option("p", pa)->required();
  refine_cmd->add_option("level", level_text)->required();

  auto* cover_cmd = app.add_subcommand("cover", "Is the family a cover of p");
  cover_cmd->add_option("p", pa)->required();
  cover_cmd->add_option("family", family)->required();

  auto* tight_cmd = app.add_subcommand("tight", "Is p the tight supremum of the family");
  tight_cmd->add_option("p", pa)->required();
  tight_cmd->add_option("family", family)->required();

  auto* ultra_cmd = app.add_subcommand("ultra", "List the maximal filters of level M");
  ultra_cmd->add_option("level", level_text)->required();
  ultra_cmd->add_flag("--brute", brute, "Enumerate by brute force (level <= 12)");

  auto* act_cmd = app.add_subcommand("act", "Apply a word to an integer");
  act_cmd->add_option("word", word)->required();
  act_cmd->add_option("x", value_text)->required();

  auto* germ_cmd = app.add_subcommand("germ", "Germ of a word at a truncated profinite point");
  germ_cmd->add_option("point", zhat, "zhat(value,level)")->required();
  germ_cmd->add_option("word", word)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose two germs");
  compose_cmd->add_option("first", germ_a, "germ(value,level; k,n,m)")->required();
  compose_cmd->add_option("second", germ_b)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Least common upper bound in P_N");
  sigma_cmd->add_option("args", sigma_args, "k1 m1 k2 m2")->required()->expected(4);

  auto* covers_p_cmd = app.add_subcommand("covers-p", "Is the family of pn(k,m) a cover of P_N");
  covers_p_cmd->add_option("family", family)->required();

  auto* covers_int_cmd = app.add_subcommand("covers-interval", "Is the family a cover of [t, infinity)");
  covers_int_cmd->add_option("t", target, "pn(k,m)")->required();
  covers_int_cmd->add_option("family", family)->required();

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare a word with the brute-force table");
  oracle_cmd->add_option("word", word)->required();
  oracle_cmd->add_option("--window", window, "Half width K of the window")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--window", config.window, "Window K for partial-injection tables")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", trials, "Override the number of random trials per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--level", verify_level, "Truncation level M");
  verify_cmd->add_option("--seed", config.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*norm) {
      out.value(normalize(parse_word(word)));
    } else if (*meet_cmd) {
      out.value(meet(parse_projection(pa), parse_projection(pb)));
    } else if (*refine_cmd) {
      for (const auto& p : refine(parse_projection(pa), parse_int(level_text))) out.value(p);
    } else if (*cover_cmd) {
      out.boolean(is_cover(parse_family(family), parse_projection(pa)));
    } else if (*tight_cmd) {
      out.boolean(is_tight_sup(parse_family(family), parse_projection(pa)));
    } else if (*ultra_cmd) {
      Int level = parse_int(level_text);
      std::vector<FilterSet> filters;
      if (brute) {
        auto small = to_i64(level);
        if (!small || *small < 1 || *small > 12) throw Error("brute force enumeration needs 1 <= level <= 12");
        filters = oracle::maximal_filters_brute(*small);
      } else {
        filters = ultrafilters(level);
      }
      for (const auto& f : filters) out.value(f);
    } else if (*act_cmd) {
      auto y = germkit::apply(normalize(parse_word(word)), parse_int(value_text));
      if (out.as_json) {
        std::cout << (y ? num(*y) : json(nullptr)).dump() << '\n';
      } else {
        std::cout << (y ? to_string(*y) : "undefined") << '\n';
      }
    } else if (*germ_cmd) {
      out.value(germ_of(parse_zhat(zhat), normalize(parse_word(word))));
    } else if (*compose_cmd) {
      out.value(compose(parse_germ(germ_a), parse_germ(germ_b)));
    } else if (*sigma_cmd) {
      PElem s = PElem::make(parse_int(sigma_args[0]), parse_int(sigma_args[1]));
      PElem t = PElem::make(parse_int(sigma_args[2]), parse_int(sigma_args[3]));
      auto lub = sigma(s, t);
      if (lub) {
        out.value(*lub);
      } else if (out.as_json) {
        std::cout << "null\n";
      } else {
        std::cout << "none\n";
      }
    } else if (*covers_p_cmd) {
      out.boolean(covers_P(parse_pfamily(family)));
    } else if (*covers_int_cmd) {
      out.boolean(covers_interval(parse_pfamily(family), parse_pelem(target)));
    } else if (*oracle_cmd) {
      Word w = parse_word(word);
      Element v = normalize(w);
      bool ok = oracle::agree(v, w, window);
      if (out.as_json) {
        std::cout << json{{"element", to_json(v)}, {"agree", ok}}.dump() << '\n';
      } else {
        std::cout << to_text(v) << ' ' << (ok ? "agrees" : "MISMATCH") << " on [-" << window << ", "
                  << window << "]\n";
      }
      return ok ? 0 : kCheckFailed;
    } else if (*verify_cmd) {
      if (trials > 0) config.trials = trials;
      config.level = parse_int(verify_level);
      if (config.level < 1) throw Error("level must be positive");
      bool all = true;
      verify::run_all(config, [&](const verify::CriterionResult& r) {
        all = all && r.passed;
        if (out.as_json) {
          std::cout << json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                            {"detail", r.detail}}
                           .dump()
                    << '\n';
        } else {
          std::cout << verify::format_line(r) << '\n';
        }
        std::cout.flush();
      });
      return all ? 0 : kCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "germkit: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    std::cerr << "germkit: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
