#include "germkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "germkit/groupoid.hpp"
#include "germkit/oracle.hpp"
#include "germkit/profinite.hpp"
#include "germkit/quasilattice.hpp"
#include "germkit/sampling.hpp"
#include "germkit/text.hpp"

namespace germkit::verify {

namespace {

class Checker {
 public:
  Checker(int id, std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
  }

  // Counts one case; the description is built only for the first failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    fail_if(!ok, describe);
  }

  // Records a failed side condition without counting a new case.
  template <class Describe>
  void require(bool ok, Describe&& describe) {
    fail_if(!ok, describe);
  }

  template <class Body>
  CriterionResult run(Body&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      fail_if(true, [&] { return std::string("unexpected error: ") + e.what(); });
    }
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  template <class Describe>
  void fail_if(bool failed, Describe&& describe) {
    if (!failed) return;
    if (result_.passed) result_.detail = describe();
    result_.passed = false;
  }

  CriterionResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::int64_t trials_or(const Config& config, std::int64_t fallback) {
  return config.trials ? *config.trials : fallback;
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word class_word(std::int64_t shift, std::int64_t modulus) {
  return {Token::u(shift), Token::e(modulus), Token::u(-shift)};
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a < 0 ? -a : a, b < 0 ? -b : b); }

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  if (m < 0) m = -m;
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// 1. Projection identities against partial-injection tables.

void meet_identities(Checker& c) {
  for (std::int64_t m = -12; m <= 12; ++m) {
    if (m == 0) continue;
    for (std::int64_t n = -12; n <= 12; ++n) {
      if (n == 0) continue;
      const std::int64_t window = 4 * lcm64(m, n) + 24;
      const std::int64_t d = std::gcd(m, n);
      const std::int64_t l = lcm64(m, n);
      for (std::int64_t r = -12; r <= 12; ++r) {
        for (std::int64_t s = -12; s <= 12; ++s) {
          Projection p = Projection::of_class(r, m);
          Projection q = Projection::of_class(s, n);
          Projection pq = meet(p, q);
          auto table = oracle::pmap_of_word(concat(class_word(r, m), class_word(s, n)), window);
          c.expect(oracle::agree(Element::of_projection(pq), table),
                   [&] { return cat("meet p(", r, ",", m, ") p(", s, ",", n, ") = ", to_text(pq)); });
          c.require(orthogonal(p, q) == table.empty(),
                    [&] { return cat("orthogonal p(", r, ",", m, ") p(", s, ",", n, ")"); });
          bool clash = mod64(r - s, d) != 0;
          c.require(clash == pq.is_zero(), [&] {
            return cat("orthogonality criterion p(", r, ",", m, ") p(", s, ",", n, ")");
          });
          if (!clash) {
            // k == r mod m, k == s mod n, found by scanning Z/[m,n]
            std::int64_t k = 0;
            while (mod64(k - r, m) != 0 || mod64(k - s, n) != 0) ++k;
            c.require(pq == Projection::of_class(k, l), [&] {
              return cat("class product p(", r, ",", m, ") p(", s, ",", n, ") != p(", k, ",", l, ")");
            });
          }
          bool canonical = r >= 0 && r < (m < 0 ? -m : m) && s >= 0 && s < (n < 0 ? -n : n);
          if (canonical) {
            auto scanned = oracle::crt_scan(p.residue(), q.residue());
            auto symbolic = crt_meet(p.residue(), q.residue());
            c.require(scanned == symbolic,
                      [&] { return cat("crt_meet ", r, " mod ", m, ", ", s, " mod ", n); });
          }
        }
      }
    }
  }
}

void decomposition_identity(Checker& c) {
  for (std::int64_t m = -12; m <= 12; ++m) {
    if (m == 0) continue;
    for (std::int64_t n = -12; n <= 12; ++n) {
      if (n == 0) continue;
      const std::int64_t window = 4 * lcm64(m, n) + 24;
      const std::int64_t level = m * n < 0 ? -m * n : m * n;
      for (std::int64_t r = -12; r <= 12; ++r) {
        Projection p = Projection::of_class(r, m);
        auto children = refine(p, level);
        auto parent = oracle::pmap_of_word(class_word(r, m), window);
        std::vector<oracle::PartialInjection> tables;
        for (const auto& child : children) {
          tables.push_back(oracle::pmap_of_word(
              class_word(static_cast<std::int64_t>(child.shift()), level), window));
        }
        bool partition = true;
        for (std::int64_t x = -window; x <= window; ++x) {
          auto hits = std::count_if(tables.begin(), tables.end(),
                                    [&](const auto& t) { return t.at(x).has_value(); });
          if (hits != (parent.at(x) ? 1 : 0)) partition = false;
        }
        c.expect(partition, [&] { return cat("refine p(", r, ",", m, ") at ", level); });
        // the children are u^(r + m k) e_(mn) u^-(r + m k), k in Z/(n)
        std::vector<Projection> expected;
        for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) {
          expected.push_back(Projection::of_class(r + m * k, level));
        }
        std::sort(expected.begin(), expected.end());
        auto sorted = children;
        std::sort(sorted.begin(), sorted.end());
        c.require(sorted == expected, [&] { return cat("refine children p(", r, ",", m, ")"); });
      }
    }
  }
}

void isometry_identities(Checker& c) {
  for (std::int64_t m = -12; m <= 12; ++m) {
    if (m == 0) continue;
    for (std::int64_t n = -12; n <= 12; ++n) {
      if (n == 0) continue;
      const std::int64_t window = 4 * lcm64(m, n) + 24;
      const std::int64_t d = std::gcd(m, n);
      const std::int64_t an = n < 0 ? -n : n;
      for (std::int64_t k = -12; k <= 12; ++k) {
        Projection p = Projection::of_class(k, n);
        Projection pulled = conj_s_star(p, m);
        Word w = concat(concat({Token::s_star(m)}, class_word(k, n)), {Token::s(m)});
        c.expect(oracle::agree(Element::of_projection(pulled), w, window),
                 [&] { return cat("s_", m, "^* p(", k, ",", n, ") s_", m, " = ", to_text(pulled)); });
        if (k % d != 0) {
          c.require(pulled.is_zero(), [&] { return cat("vanishing pullback m=", m, " n=", n, " k=", k); });
        } else {
          std::int64_t r = 0;
          while (mod64(m * r - k, an) != 0) ++r;
          c.require(pulled == Projection::of_class(r, an / d),
                    [&] { return cat("pullback class m=", m, " n=", n, " k=", k); });
        }
        if (k == 0) {
          c.require(pulled == Projection::of_class(0, an / d),
                    [&] { return cat("s_m^* e_n s_m m=", m, " n=", n); });
        }
        Projection pushed = conj_s(p, m);
        Word v = concat(concat({Token::s(m)}, class_word(k, n)), {Token::s_star(m)});
        c.expect(oracle::agree(Element::of_projection(pushed), v, window),
                 [&] { return cat("s_", m, " p(", k, ",", n, ") s_", m, "^* = ", to_text(pushed)); });
      }
    }
  }
}

// ---------------------------------------------------------------------------

void random_pair_word(Rng& rng, Word& w, Element& v, const WordShape& shape) {
  for (;;) {
    w = random_word(rng, shape);
    v = normalize(w);
    if (!v.is_zero()) return;
  }
}

std::int64_t word_window(const Config& config, const Word& w) {
  // large enough to contain several periods of every modulus in the word
  std::int64_t l = 1;
  for (const auto& t : w) {
    if (t.kind != Token::Kind::U) l = lcm64(l, static_cast<std::int64_t>(t.value));
  }
  return std::max(config.window, std::min<std::int64_t>(4 * l + 24, 4096));
}

}  // namespace

CriterionResult projection_identities(const Config&) {
  return Checker(1, "projection identities").run([](Checker& c) {
    meet_identities(c);
    decomposition_identity(c);
    isometry_identities(c);
  });
}

CriterionResult composition_rule(const Config& config) {
  return Checker(2, "rule of composition").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 2);
    for (std::int64_t i = 0; i < trials_or(config, 1000); ++i) {
      std::int64_t m1 = uniform_nonzero(rng, -9, 9), n1 = uniform_nonzero(rng, -9, 9);
      std::int64_t m2 = uniform_nonzero(rng, -9, 9), n2 = uniform_nonzero(rng, -9, 9);
      std::int64_t k1 = uniform(rng, -20, 20), k2 = uniform(rng, -20, 20);
      Word lhs = {Token::s_star(m1), Token::u(k1), Token::s(n1),
                  Token::s_star(m2), Token::u(k2), Token::s(n2)};
      Word rhs = {Token::s_star(m1 * m2), Token::u(m2 * k1), Token::e(m2 * n1), Token::u(k2 * n1),
                  Token::s(n1 * n2)};
      Element a = normalize(lhs), b = normalize(rhs);
      std::int64_t window = std::max(config.window, 4 * std::abs(m1 * m2) + 24);
      c.expect(a == b && oracle::agree(a, lhs, window) && oracle::agree(b, rhs, window), [&] {
        return cat("sextuple m1=", m1, " k1=", k1, " n1=", n1, " m2=", m2, " k2=", k2, " n2=", n2,
                   ": ", to_text(a), " vs ", to_text(b));
      });
    }
  });
}

CriterionResult inverse_semigroup_axioms(const Config& config) {
  return Checker(3, "inverse semigroup axioms").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 3);
    WordShape shape{5, 6, 10};
    for (std::int64_t i = 0; i < trials_or(config, 1000); ++i) {
      Word wv, ww, wx;
      Element v, w, x;
      random_pair_word(rng, wv, v, shape);
      random_pair_word(rng, ww, w, shape);
      random_pair_word(rng, wx, x, shape);
      Element vs = star(v);
      bool regular = mul(mul(v, vs), v) == v && mul(mul(vs, v), vs) == vs;
      bool involution = star(mul(v, w)) == mul(star(w), vs) && star(vs) == v;
      Element e = mul(v, vs), f = mul(star(w), w);
      bool commute = mul(e, f) == mul(f, e);
      auto proj = as_projection(e);
      bool idempotent = proj && *proj == range(v) && as_projection(mul(vs, v)) == source(v);
      bool assoc = mul(mul(v, w), x) == mul(v, mul(w, x));
      Word joined = concat(wv, ww);
      Element vw = mul(v, w);
      bool oracle_ok = normalize(joined) == vw && oracle::agree(vw, joined, word_window(config, joined));
      c.expect(regular && involution && commute && idempotent && assoc && oracle_ok, [&] {
        return cat("v=", to_text(v), " w=", to_text(w), " x=", to_text(x), " regular=", regular,
                   " involution=", involution, " commute=", commute, " idempotent=", idempotent,
                   " assoc=", assoc, " oracle=", oracle_ok);
      });
    }
  });
}

CriterionResult tight_characters(const Config&) {
  return Checker(4, "tight character space").run([](Checker& c) {
    for (std::int64_t level = 1; level <= 10; ++level) {
      auto brute = oracle::maximal_filters_brute(level);
      auto direct = ultrafilters(level);
      auto sort = [](std::vector<FilterSet>& v) {
        std::sort(v.begin(), v.end(), [](const FilterSet& a, const FilterSet& b) {
          return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                              b.members.end());
        });
      };
      std::vector<FilterSet> supports;
      for (std::int64_t r = 0; r < level; ++r) {
        supports.push_back(filter_support(TruncatedProfinite::make(r, level)));
      }
      sort(brute);
      sort(direct);
      sort(supports);
      bool maximal = std::all_of(direct.begin(), direct.end(),
                                 [&](const FilterSet& f) { return is_maximal_filter(f, level); });
      c.expect(brute.size() == static_cast<std::size_t>(level) && brute == supports && direct == supports &&
                    maximal, [&] {
        return cat("level ", level, ": brute force found ", brute.size(), " maximal filters");
      });
    }
  });
}

CriterionResult cover_tightness(const Config& config) {
  return Checker(5, "cover equals tight supremum").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 5);
    for (std::int64_t i = 0; i < trials_or(config, 200); ++i) {
      std::int64_t q = uniform(rng, 1, 6);
      Projection p = Projection::of_class(uniform(rng, 0, q - 1), q);
      std::int64_t level = q * uniform(rng, 1, 6);
      auto children = refine(p, level);
      std::vector<Projection> family;
      for (const auto& child : children) {
        if (uniform(rng, 0, 3) != 0) family.push_back(child);
      }
      // a second refinement level mixed in
      std::int64_t finer = level * uniform(rng, 1, 3);
      for (const auto& child : refine(p, finer)) {
        if (uniform(rng, 0, 5) == 0) family.push_back(child);
      }
      if (family.empty()) family.push_back(children.front());
      bool cover = is_cover(family, p), tight = is_tight_sup(family, p);
      bool flips = true;
      for (std::size_t drop = 0; drop < children.size() && children.size() > 1; ++drop) {
        std::vector<Projection> partial;
        for (std::size_t j = 0; j < children.size(); ++j) {
          if (j != drop) partial.push_back(children[j]);
        }
        flips = flips && !is_cover(partial, p) && !is_tight_sup(partial, p);
      }
      bool full = is_cover(children, p) && is_tight_sup(children, p);
      c.expect(cover == tight && flips && full, [&] {
        return cat("p=", to_text(p), " level ", level, " cover=", cover, " tight=", tight,
                   " flips=", flips, " full=", full);
      });
    }
  });
}

namespace {

// A random point of the range class of v at the given level.
TruncatedProfinite point_in_range(Rng& rng, const Element& v, const Int& level) {
  Int x = v.dom().shift() + v.dom().modulus() * Int(uniform(rng, -50, 50));
  return TruncatedProfinite::make(*germkit::apply(v, x), level);
}

void functoriality_pairs(Checker& c, const Config& config, Rng& rng) {
  WordShape shape{4, 12, 20};
  std::int64_t found = 0, zero_checked = 0;
  const std::int64_t wanted = trials_or(config, 500);
  for (std::int64_t attempt = 0; found < wanted && attempt < 1000 * wanted; ++attempt) {
    Element v = normalize(random_word(rng, shape));
    Element w = normalize(random_word(rng, shape));
    if (v.is_zero() || w.is_zero()) continue;
    Element vw = mul(v, w);
    if (vw.is_zero()) {
      if (zero_checked >= 32) continue;
      // no base point of range(v) is carried by v into range(w)
      if (!divides(range(v).modulus(), config.level)) continue;
      bool any = false;
      bool truncation_ok = true;
      for (int j = 0; j < 16; ++j) {
        try {
          auto r = point_in_range(rng, v, config.level);
          auto pulled = source(germ_of(r, v));
          if (!divides(range(w).modulus(), pulled.level())) {
            truncation_ok = false;
            break;
          }
          any = any || char_eval(pulled, range(w));
        } catch (const Error&) {
          truncation_ok = false;
          break;
        }
      }
      if (!truncation_ok) continue;
      ++zero_checked;
      c.require(!any, [&] { return cat("zero product v=", to_text(v), " w=", to_text(w)); });
      continue;
    }
    TruncatedProfinite r = point_in_range(rng, vw, config.level);
    std::optional<Germ> lhs, rhs, g1, g2;
    try {
      g1 = germ_of(r, v);
      g2 = germ_of(source(*g1), w);
      rhs = germ_of(r, vw);
    } catch (const Error&) {
      continue;  // level not divisible enough for this pair
    }
    lhs = compose(*g1, *g2);
    bool same_source = germ_eq(germ_new(source(*lhs), AffineRational::identity()),
                               germ_new(source(*g2), AffineRational::identity()));
    c.expect(germ_eq(*lhs, *rhs) && same_source, [&] {
      return cat("r=", to_text(r), " v=", to_text(v), " w=", to_text(w), ": ", to_text(*lhs), " vs ",
                 to_text(*rhs));
    });
    ++found;
  }
  c.require(found == wanted, [&] { return cat("only ", found, " composable pairs sampled"); });
}

void omitting_projections(Checker& c, const Config& config, Rng& rng) {
  std::int64_t found = 0;
  const std::int64_t wanted = trials_or(config, 200);
  for (std::int64_t attempt = 0; found < wanted && attempt < 1000 * wanted; ++attempt) {
    std::int64_t mp = uniform_nonzero(rng, -12, 12), m = uniform_nonzero(rng, -12, 12);
    std::int64_t k = uniform_nonzero(rng, -12, 12);
    std::int64_t np = uniform(rng, -20, 20), n = uniform(rng, -20, 20);
    Element with = normalize({Token::s_star(mp), Token::u(np), Token::e(k), Token::u(n), Token::s(m)});
    Element without = normalize({Token::s_star(mp), Token::u(n + np), Token::s(m)});
    if (with.is_zero()) continue;
    TruncatedProfinite r = point_in_range(rng, with, config.level);
    std::optional<Germ> a, b;
    try {
      a = germ_of(r, with);
      b = germ_of(r, without);
    } catch (const Error&) {
      continue;
    }
    c.expect(germ_eq(*a, *b), [&] { return cat("omitting e_", k, ": ", to_text(*a), " vs ", to_text(*b)); });
    ++found;
  }
  c.require(found == wanted, [&] { return cat("only ", found, " omitting-projection cases sampled"); });
}

void scaling_invariance(Checker& c, const Config& config, Rng& rng) {
  std::int64_t found = 0;
  const std::int64_t wanted = trials_or(config, 200);
  for (std::int64_t attempt = 0; found < wanted && attempt < 1000 * wanted; ++attempt) {
    std::int64_t m = uniform_nonzero(rng, -12, 12), n = uniform_nonzero(rng, -12, 12);
    std::int64_t k = uniform(rng, -20, 20), lambda = uniform_nonzero(rng, -6, 6);
    Element base = normalize({Token::s_star(m), Token::u(k), Token::s(n)});
    Element scaled = normalize({Token::s_star(lambda * m), Token::u(lambda * k), Token::s(lambda * n)});
    if (base.is_zero()) continue;
    TruncatedProfinite r = point_in_range(rng, base, config.level);
    std::optional<Germ> a, b;
    try {
      a = germ_new(r, k, n, m);
      b = germ_new(r, lambda * k, lambda * n, lambda * m);
    } catch (const Error&) {
      continue;
    }
    c.expect(base == scaled && germ_eq(*a, *b), [&] {
      return cat("scaling (", k, ",", n, ",", m, ") by ", lambda, ": ", to_text(base), " vs ",
                 to_text(scaled));
    });
    ++found;
  }
  c.require(found == wanted, [&] { return cat("only ", found, " scaling cases sampled"); });
}

}  // namespace

CriterionResult groupoid_functoriality(const Config& config) {
  return Checker(6, "groupoid functoriality").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 6);
    functoriality_pairs(c, config, rng);
    omitting_projections(c, config, rng);
    scaling_invariance(c, config, rng);
  });
}

CriterionResult dynamics(const Config& config) {
  return Checker(7, "isotropy and minimality").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 7);
    auto level = to_i64(config.level);
    if (!level || *level > (std::int64_t{1} << 24)) throw Error("level too large for the dynamics scan");
    std::int64_t max_fixed = 0;
    for (std::int64_t i = 0; i < trials_or(config, 100); ++i) {
      std::int64_t m = uniform(rng, 1, 24);
      std::int64_t n = m + uniform_nonzero(rng, -12, 12);
      if (n == 0) n = m + 1;
      AffineRational g = AffineRational::make(uniform(rng, -40, 40), n, m);
      auto fixed = isotropy_solutions(g, config.level);
      auto diff = static_cast<std::int64_t>(g.m() - g.n());
      auto k = static_cast<std::int64_t>(g.k());
      std::int64_t bound = std::gcd(diff < 0 ? -diff : diff, *level);
      // independent scan of the fixed-point congruence
      std::vector<Residue> scanned;
      for (std::int64_t r = 0; r < *level; ++r) {
        if (mod64(diff * r - k, *level) == 0) scanned.push_back(Residue{r, *level});
      }
      auto count = static_cast<std::int64_t>(fixed.size());
      max_fixed = std::max(max_fixed, count);
      bool exact = count == 0 || count == bound;
      c.expect(fixed == scanned && count <= bound && exact && count <= 12, [&] {
        return cat("g=(", g.k(), ",", g.n(), ",", g.m(), "): ", count, " fixed residues, bound ", bound);
      });
    }
    for (std::int64_t q = 1; q <= 12; ++q) {
      if (*level % q != 0) continue;
      c.expect(translation_orbit_covers(q, config.level), [&] { return cat("translates of 0 mod ", q); });
    }
  });
}

namespace {

void sigma_exhaustive(Checker& c) {
  for (std::int64_t ks = 0; ks <= 16; ++ks) {
    for (std::int64_t ms = 1; ms <= 8; ++ms) {
      for (std::int64_t kt = 0; kt <= 16; ++kt) {
        for (std::int64_t mt = 1; mt <= 8; ++mt) {
          PElem s{ks, ms}, t{kt, mt};
          auto symbolic = sigma(s, t);
          auto scanned = oracle::sigma_scan(s, t, 200);
          c.expect(symbolic == scanned && cub_exists(s, t) == scanned.has_value(),
                   [&] { return cat("sigma(", to_text(s), ", ", to_text(t), ")"); });
          bool bridge = cub_exists(s, t) == !orthogonal(pelem_to_projection(s), pelem_to_projection(t));
          c.require(bridge, [&] { return cat("bridge ", to_text(s), ", ", to_text(t)); });
        }
      }
    }
  }
}

void covers_definitional(Checker& c, const Config& config, Rng& rng) {
  for (std::int64_t i = 0; i < trials_or(config, 200); ++i) {
    std::vector<PElem> family;
    auto size = uniform(rng, 1, 4);
    std::int64_t level = 1, top = 0;
    for (std::int64_t j = 0; j < size; ++j) {
      std::int64_t m = uniform(rng, 1, 4), k = uniform(rng, 0, 8);
      family.push_back(PElem{k, m});
      level = std::lcm(level, m);
      top = std::max(top, k);
    }
    bool definitional = true;
    for (std::int64_t k = 0; k < level && definitional; ++k) {
      PElem x{k, level};
      definitional = std::any_of(family.begin(), family.end(), [&](const PElem& f) {
        return oracle::sigma_scan(x, f, top + 2 * level).has_value();
      });
    }
    c.expect(covers_P(family) == definitional, [&] {
      std::string text;
      for (const auto& f : family) text += to_text(f) + " ";
      return cat("covers_P {", text, "}");
    });
  }
}

void wiener_hopf(Checker& c, const Config& config, Rng& rng) {
  for (std::int64_t i = 0; i < trials_or(config, 200); ++i) {
    PElem s{uniform(rng, 0, 20), uniform(rng, 1, 10)};
    PElem t{uniform(rng, 0, 20), uniform(rng, 1, 10)};
    c.expect(oracle::wh_upper_agree(s, t, config.window),
             [&] { return cat("Wiener-Hopf ", to_text(s), ", ", to_text(t)); });
  }
}

}  // namespace

CriterionResult quasi_lattice(const Config& config) {
  return Checker(8, "quasi-lattice order").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 8);
    sigma_exhaustive(c);
    covers_definitional(c, config, rng);
    wiener_hopf(c, config, rng);
  });
}

CriterionResult text_round_trip(const Config& config) {
  return Checker(9, "word text round trip").run([&](Checker& c) {
    Rng rng(config.seed * 1000003 + 9);
    WordShape shape{6, 12, 30};
    for (std::int64_t i = 0; i < trials_or(config, 300); ++i) {
      Element v = random_element(rng, shape);
      std::string text = to_text(to_word(v));
      Element back = normalize(parse_word(text));
      c.expect(back == v, [&] { return cat(to_text(v), " -> \"", text, "\" -> ", to_text(back)); });
    }
    struct Malformed {
      const char* text;
      std::size_t position;
    };
    const Malformed corpus[] = {
        {"s(2)* u(1) x(3)", 11}, {"e(0)", 2},       {"s(2", 3},  {"u()", 2},
        {"s(0)*", 2},            {"", 0},           {"u(1) )", 5}, {"s(2)** u(1)", 5},
    };
    for (const auto& bad : corpus) {
      bool ok = false;
      try {
        parse_word(bad.text);
      } catch (const ParseError& e) {
        ok = e.position() == bad.position;
      }
      c.expect(ok, [&] { return cat("malformed \"", bad.text, "\" not rejected at ", bad.position); });
    }
  });
}

std::vector<CriterionResult> run_all(const Config& config,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  using Fn = CriterionResult (*)(const Config&);
  const Fn all[] = {projection_identities,     composition_rule,       inverse_semigroup_axioms,
                    tight_characters, cover_tightness,        groupoid_functoriality,
                    dynamics,         quasi_lattice,          text_round_trip};
  std::vector<CriterionResult> out;
  for (Fn fn : all) {
    out.push_back(fn(config));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::string line = cat(r.passed ? "[PASS] " : "[FAIL] ", r.id, " ", r.name, " (", r.cases, " cases)");
  if (!r.passed) line += ": " + r.detail;
  return line;
}

}  // namespace germkit::verify
