#include "germkit/oracle.hpp"

#include <algorithm>

namespace germkit::oracle {

PartialInjection::PartialInjection(std::int64_t window) : window_(window) {
  if (window < 1) throw Error("window must be positive");
  table_.resize(static_cast<std::size_t>(2 * window + 1));
}

std::optional<std::int64_t> PartialInjection::at(std::int64_t x) const {
  if (x < -window_ || x > window_) return std::nullopt;
  return table_[static_cast<std::size_t>(x + window_)];
}

void PartialInjection::set(std::int64_t x, std::int64_t y) {
  if (x < -window_ || x > window_) throw Error("point outside window");
  table_[static_cast<std::size_t>(x + window_)] = y;
}

std::size_t PartialInjection::size() const {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const auto& y) { return y.has_value(); }));
}

Int safety_bound(const Word& w, std::int64_t window) {
  Int shifts = 0;
  Int scale = 1;
  for (const auto& t : w) {
    if (t.kind == Token::Kind::U) shifts += abs(t.value);
    if (t.kind == Token::Kind::S) scale *= abs(t.value);
  }
  return (Int(window) + shifts) * scale;
}

namespace {

constexpr std::int64_t kMaxBound = std::int64_t{1} << 62;

struct SmallToken {
  Token::Kind kind;
  std::int64_t value;
};

std::vector<SmallToken> narrow(const Word& w) {
  std::vector<SmallToken> out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back({t.kind, static_cast<std::int64_t>(t.value)});
  return out;
}

std::int64_t floor_mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

PartialInjection pmap_of_word(const Word& w, std::int64_t window) {
  Int bound_big = safety_bound(w, window);
  if (bound_big >= kMaxBound) throw Error("safety bound exceeds oracle range");
  auto bound = static_cast<std::int64_t>(bound_big);
  auto tokens = narrow(w);
  PartialInjection out(window);
  for (std::int64_t x = -window; x <= window; ++x) {
    std::int64_t y = x;
    bool defined = true;
    for (auto it = tokens.rbegin(); it != tokens.rend() && defined; ++it) {
      switch (it->kind) {
        case Token::Kind::S:
          y *= it->value;
          break;
        case Token::Kind::SStar:
          if (y % it->value != 0) {
            defined = false;
          } else {
            y /= it->value;
          }
          break;
        case Token::Kind::U:
          y += it->value;
          break;
        case Token::Kind::E:
          defined = y % it->value == 0;
          break;
      }
      if (y > bound || y < -bound) defined = false;
    }
    if (defined) out.set(x, y);
  }
  return out;
}

PartialInjection pmap_of_element(const Element& v, std::int64_t window) {
  PartialInjection out(window);
  if (v.is_zero()) return out;
  auto n = to_i64(v.num()), t = to_i64(v.shift()), m = to_i64(v.den());
  auto rho = to_i64(v.dom().shift()), q = to_i64(v.dom().modulus());
  Int reach = abs(v.num()) * window + abs(v.shift());
  if (n && t && m && rho && q && reach < kMaxBound) {
    for (std::int64_t x = -window; x <= window; ++x) {
      if (floor_mod64(x - *rho, *q) == 0) out.set(x, (*n * x + *t) / *m);
    }
    return out;
  }
  for (std::int64_t x = -window; x <= window; ++x) {
    auto y = germkit::apply(v, Int(x));
    if (!y) continue;
    auto small = to_i64(*y);
    if (!small) throw Error("image exceeds oracle range");
    out.set(x, *small);
  }
  return out;
}

bool agree(const Element& v, const PartialInjection& table) {
  return pmap_of_element(v, table.window()) == table;
}

bool agree(const Element& v, const Word& w, std::int64_t window) {
  return agree(v, pmap_of_word(w, window));
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.window() != g.window()) throw Error("window mismatch");
  PartialInjection out(g.window());
  for (std::int64_t x = -g.window(); x <= g.window(); ++x) {
    auto y = g.at(x);
    if (!y) continue;
    auto z = f.at(*y);
    if (z) out.set(x, *z);
  }
  return out;
}

std::optional<Residue> crt_scan(const Residue& a, const Residue& b) {
  std::vector<Int> hits;
  Int span = a.modulus * b.modulus;
  for (Int x = 0; x < span && hits.size() < 2; ++x) {
    if (a.contains(x) && b.contains(x)) hits.push_back(x);
  }
  if (hits.empty()) return std::nullopt;
  Int period = hits.size() == 2 ? Int(hits[1] - hits[0]) : span;
  return Residue{hits[0], period};
}

std::set<PElem> wiener_hopf_range(const PElem& s, std::int64_t window) {
  std::set<PElem> out;
  for (std::int64_t mb = 1; s.m * mb <= window; ++mb) {
    for (std::int64_t kb = 0; s.k + s.m * kb <= window; ++kb) out.insert(s * PElem{kb, mb});
  }
  return out;
}

std::optional<PElem> sigma_scan(const PElem& s, const PElem& t, std::int64_t bound) {
  auto ks = static_cast<std::int64_t>(s.k), ms = static_cast<std::int64_t>(s.m);
  auto kt = static_cast<std::int64_t>(t.k), mt = static_cast<std::int64_t>(t.m);
  // a is above x iff x^-1 a = [[1,0],[(k_a - k_x)/m_x, m_a/m_x]] has entries in N
  auto above = [](std::int64_t kx, std::int64_t mx, std::int64_t ka, std::int64_t ma) {
    return ma % mx == 0 && ka >= kx && (ka - kx) % mx == 0;
  };
  std::vector<std::pair<std::int64_t, std::int64_t>> common;
  for (std::int64_t ma = 1; ma <= bound; ++ma) {
    if (ma % ms != 0 || ma % mt != 0) continue;
    for (std::int64_t ka = 0; ka <= bound; ++ka) {
      if (above(ks, ms, ka, ma) && above(kt, mt, ka, ma)) common.emplace_back(ka, ma);
    }
  }
  if (common.empty()) return std::nullopt;
  // a least element has the smallest modulus and then the smallest shift
  auto [kc, mc] = *std::min_element(common.begin(), common.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  bool least = std::all_of(common.begin(), common.end(),
                           [&](const auto& a) { return above(kc, mc, a.first, a.second); });
  if (least) return PElem{kc, mc};
  return std::nullopt;
}

bool wh_upper_agree(const PElem& s, const PElem& t, std::int64_t window) {
  auto us = wiener_hopf_range(s, window);
  auto ut = wiener_hopf_range(t, window);
  std::set<PElem> both;
  std::set_intersection(us.begin(), us.end(), ut.begin(), ut.end(), std::inserter(both, both.end()));
  auto lub = sigma(s, t);
  if (!lub) return both.empty();
  return both == upper_set_window(*lub, window);
}

namespace {

using Mask = std::uint64_t;

struct Universe {
  std::vector<Projection> classes;
  std::vector<std::vector<bool>> points;  // residues mod M in each class
};

Universe level_classes(std::int64_t level) {
  Universe u;
  for (std::int64_t q = 1; q <= level; ++q) {
    if (level % q != 0) continue;
    for (std::int64_t rho = 0; rho < q; ++rho) {
      std::vector<bool> pts(static_cast<std::size_t>(level));
      for (std::int64_t x = 0; x < level; ++x) pts[static_cast<std::size_t>(x)] = x % q == rho;
      u.classes.push_back(Projection::of_class(rho, q));
      u.points.push_back(std::move(pts));
    }
  }
  return u;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::vector<bool> intersect(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

struct Search {
  std::size_t n;
  std::vector<Mask> above;       // strict supersets among the classes
  std::vector<Mask> meets;       // classes with nonempty intersection
  std::vector<std::vector<int>> meet_index;  // index of the intersection class, -1 if none
  std::vector<Mask> found;

  // Candidates are visited coarsest first, so every superset of class i has
  // an index below i and upward closure can be checked on inclusion.
  void run(std::size_t i, Mask chosen) {
    if (i == n) {
      if (chosen != 0 && meet_closed(chosen)) found.push_back(chosen);
      return;
    }
    run(i + 1, chosen);
    Mask bit = Mask{1} << i;
    bool up_closed = (above[i] & ~chosen) == 0;
    bool intersecting = (chosen & ~meets[i]) == 0;
    if (up_closed && intersecting) run(i + 1, chosen | bit);
  }

  bool meet_closed(Mask chosen) const {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(chosen >> a & 1)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!(chosen >> b & 1)) continue;
        int c = meet_index[a][b];
        if (c < 0 || !(chosen >> c & 1)) return false;
      }
    }
    return true;
  }
};

}  // namespace

std::vector<FilterSet> filters_brute(std::int64_t level) {
  if (level < 1 || level > 12) throw Error("brute-force filter search supports levels 1..12");
  Universe u = level_classes(level);
  Search search;
  search.n = u.classes.size();
  search.above.assign(search.n, 0);
  search.meets.assign(search.n, 0);
  search.meet_index.assign(search.n, std::vector<int>(search.n, -1));
  for (std::size_t a = 0; a < search.n; ++a) {
    for (std::size_t b = 0; b < search.n; ++b) {
      auto both = intersect(u.points[a], u.points[b]);
      bool nonempty = std::find(both.begin(), both.end(), true) != both.end();
      if (nonempty) search.meets[a] |= Mask{1} << b;
      if (a != b && subset(u.points[a], u.points[b])) search.above[a] |= Mask{1} << b;
      for (std::size_t c = 0; c < search.n && nonempty; ++c) {
        if (u.points[c] == both) search.meet_index[a][b] = static_cast<int>(c);
      }
    }
  }
  search.run(0, 0);
  std::vector<FilterSet> out;
  for (Mask m : search.found) {
    std::vector<Projection> members;
    for (std::size_t i = 0; i < search.n; ++i) {
      if (m >> i & 1) members.push_back(u.classes[i]);
    }
    out.push_back(FilterSet::make(level, std::move(members)));
  }
  return out;
}

std::vector<FilterSet> maximal_filters_brute(std::int64_t level) {
  auto all = filters_brute(level);
  std::vector<FilterSet> out;
  for (const auto& f : all) {
    bool strictly_contained = std::any_of(all.begin(), all.end(), [&](const FilterSet& g) {
      return g.members.size() > f.members.size() &&
             std::includes(g.members.begin(), g.members.end(), f.members.begin(), f.members.end());
    });
    if (!strictly_contained) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const FilterSet& a, const FilterSet& b) {
    return a.members.back() < b.members.back();
  });
  return out;
}

}  // namespace germkit::oracle
