#include "germkit/projection.hpp"

#include <vector>

namespace germkit {

const Residue& Projection::checked() const {
  if (!cls_) throw Error("zero projection has no class");
  return *cls_;
}

std::strong_ordering operator<=>(const Projection& a, const Projection& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus() ? std::strong_ordering::less
                                                                   : std::strong_ordering::greater;
  if (a.shift() == b.shift()) return std::strong_ordering::equal;
  return a.shift() < b.shift() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Projection meet(const Projection& p, const Projection& q) {
  if (p.is_zero() || q.is_zero()) return Projection::zero();
  auto r = crt_meet(p.residue(), q.residue());
  return r ? Projection::of_residue(*r) : Projection::zero();
}

bool leq(const Projection& p, const Projection& q) { return meet(p, q) == p; }

bool orthogonal(const Projection& p, const Projection& q) { return meet(p, q).is_zero(); }

std::vector<Projection> refine(const Projection& p, const Int& level) {
  if (p.is_zero()) return {};
  if (level <= 0 || !divides(p.modulus(), level)) throw Error("incompatible modulus");
  std::vector<Projection> children;
  Int count = level / p.modulus();
  for (Int j = 0; j < count; ++j) {
    children.push_back(Projection::of_class(p.shift() + p.modulus() * j, level));
  }
  return children;
}

Projection conj_u(const Projection& p, const Int& n) {
  if (p.is_zero()) return p;
  return Projection::of_class(p.shift() + n, p.modulus());
}

Projection conj_s(const Projection& p, const Int& m) {
  if (m == 0) throw Error("zero modulus");
  if (p.is_zero()) return p;
  return Projection::of_class(m * p.shift(), abs(m) * p.modulus());
}

Projection conj_s_star(const Projection& p, const Int& m) {
  if (m == 0) throw Error("zero modulus");
  if (p.is_zero()) return p;
  // {x : m x == k mod n}
  auto r = solve_linear_congruence(m, p.shift(), p.modulus());
  return r ? Projection::of_residue(*r) : Projection::zero();
}

namespace {

void check_interval_family(std::span<const Projection> family, const Projection& p) {
  if (p.is_zero()) throw Error("not a subset of interval");
  for (const auto& f : family) {
    if (f.is_zero() || !leq(f, p)) throw Error("not a subset of interval");
  }
}

Int common_level(std::span<const Projection> family, const Projection& p) {
  Int level = p.modulus();
  for (const auto& f : family) level = lcm(level, f.modulus());
  return level;
}

std::size_t enumerable(const Int& level) {
  // level-sized bit tables past this point are not worth materializing
  constexpr std::size_t kLimit = std::size_t{1} << 28;
  if (level > kLimit) throw Error("cover level too large to enumerate");
  return static_cast<std::size_t>(level);
}

}  // namespace

bool is_cover(std::span<const Projection> family, const Projection& p) {
  check_interval_family(family, p);
  Int level = common_level(family, p);
  // A child mod L meets a class of modulus dividing L iff it lies inside it.
  for (const auto& child : refine(p, level)) {
    bool hit = false;
    for (const auto& f : family) {
      if (f.contains(child.shift())) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_tight_sup(std::span<const Projection> family, const Projection& p) {
  check_interval_family(family, p);
  Int level = common_level(family, p);
  std::size_t size = enumerable(level);
  std::vector<bool> covered(size, false);
  for (const auto& f : family) {
    auto step = static_cast<std::size_t>(f.modulus());
    for (auto x = static_cast<std::size_t>(f.shift()); x < size; x += step) covered[x] = true;
  }
  auto q = static_cast<std::size_t>(p.modulus());
  auto rho = static_cast<std::size_t>(p.shift());
  for (std::size_t x = 0; x < size; ++x) {
    bool in_p = x % q == rho;
    if (covered[x] != in_p) return false;
  }
  return true;
}

}  // namespace germkit
