#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "germkit/profinite.hpp"
#include "germkit/quasilattice.hpp"
#include "germkit/semigroup.hpp"

/// Brute-force ground truth. Nothing here calls the symbolic meet, CRT,
/// mul or sigma routines; results come from enumerating points of Z, of
/// Z/M, or of P_N inside finite windows.
namespace germkit::oracle {

/// A partial injection of Z observed on the window [-K, K]. Images may fall
/// outside the window.
class PartialInjection {
 public:
  explicit PartialInjection(std::int64_t window);

  std::int64_t window() const { return window_; }
  std::optional<std::int64_t> at(std::int64_t x) const;
  void set(std::int64_t x, std::int64_t y);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;

 private:
  std::int64_t window_;
  std::vector<std::optional<std::int64_t>> table_;
};

/// Bound on every intermediate value when a word acts on [-K, K]:
/// (K + sum of |u shifts|) * product of |s multipliers|.
Int safety_bound(const Word& w, std::int64_t window);

/// Acts with the tokens right to left (operator composition on delta_x).
/// Points whose orbit leaves the safety bound are dropped; the bound must
/// fit in 62 bits.
PartialInjection pmap_of_word(const Word& w, std::int64_t window);

/// The table of a symbolic element on the window.
PartialInjection pmap_of_element(const Element& v, std::int64_t window);

/// apply(v, .) matches the table on the whole window.
bool agree(const Element& v, const PartialInjection& table);
bool agree(const Element& v, const Word& w, std::int64_t window);

/// f after g on the window (points of g's table whose image leaves the
/// window are dropped).
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);

/// Intersection of two classes by scanning [0, m1*m2).
std::optional<Residue> crt_scan(const Residue& a, const Residue& b);

/// The upper set s P_N inside a window, generated as the basis images
/// W(s) delta_b = delta_{s b}.
std::set<PElem> wiener_hopf_range(const PElem& s, std::int64_t window);

/// Least common upper bound found by scanning all a with k_a, m_a <= bound.
std::optional<PElem> sigma_scan(const PElem& s, const PElem& t, std::int64_t bound);

/// Wiener-Hopf window intersection of the upper sets of s and t equals the
/// window upper set of sigma(s, t), or is empty when no bound exists.
bool wh_upper_agree(const PElem& s, const PElem& t, std::int64_t window);

/// Every filter of E_M found by search over subsets, using only the
/// residue sets of the classes; M <= 12.
std::vector<FilterSet> filters_brute(std::int64_t level);

/// The inclusion-maximal members of filters_brute(M).
std::vector<FilterSet> maximal_filters_brute(std::int64_t level);

}  // namespace germkit::oracle
