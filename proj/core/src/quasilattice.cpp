#include "germkit/quasilattice.hpp"

#include <vector>

namespace germkit {

PElem PElem::make(const Int& k, const Int& m) {
  if (k < 0 || m < 1) throw Error("not an element of P_N");
  return PElem{k, m};
}

std::strong_ordering operator<=>(const PElem& a, const PElem& b) {
  auto cmp = [](const Int& x, const Int& y) {
    if (x == y) return std::strong_ordering::equal;
    return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  };
  auto c = cmp(a.k, b.k);
  return c != 0 ? c : cmp(a.m, b.m);
}

PElem operator*(const PElem& s, const PElem& t) { return PElem{s.k + s.m * t.k, s.m * t.m}; }

bool qleq(const PElem& s, const PElem& t) {
  // s^-1 t = [[1, 0], [(k_t - k_s)/m_s, m_t/m_s]]
  Int dk = t.k - s.k;
  return divides(s.m, t.m) && dk >= 0 && divides(s.m, dk);
}

bool cub_exists(const PElem& s, const PElem& t) {
  return floor_mod(s.k - t.k, gcd(s.m, t.m)) == 0;
}

std::optional<PElem> sigma(const PElem& s, const PElem& t) {
  auto cls = crt_meet(Residue::make(s.k, s.m), Residue::make(t.k, t.m));
  if (!cls) return std::nullopt;
  // least k >= max(k_s, k_t) in the class
  Int floor = s.k > t.k ? s.k : t.k;
  Int k = floor + floor_mod(cls->value - floor, cls->modulus);
  return PElem{k, cls->modulus};
}

bool covers_P(std::span<const PElem> family) {
  if (family.empty()) throw Error("empty family");
  std::vector<Projection> classes;
  for (const auto& f : family) classes.push_back(pelem_to_projection(f));
  return is_tight_sup(classes, Projection::unit());
}

bool covers_interval(std::span<const PElem> family, const PElem& t) {
  std::vector<PElem> translated;
  for (const auto& f : family) {
    if (!qleq(t, f)) throw Error("not in interval");
    translated.push_back(PElem{(f.k - t.k) / t.m, f.m / t.m});
  }
  return covers_P(translated);
}

Projection pelem_to_projection(const PElem& s) { return Projection::of_class(s.k, s.m); }

std::set<PElem> upper_set_window(const PElem& s, const Int& window) {
  if (window < 1) throw Error("window must be positive");
  std::set<PElem> out;
  for (Int m = 1; m <= window; ++m) {
    for (Int k = 0; k <= window; ++k) {
      PElem a{k, m};
      if (qleq(s, a)) out.insert(std::move(a));
    }
  }
  return out;
}

}  // namespace germkit
