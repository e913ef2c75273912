#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "germkit/groupoid.hpp"
#include "germkit/profinite.hpp"
#include "germkit/quasilattice.hpp"
#include "germkit/semigroup.hpp"

namespace germkit {

/// Malformed text; position is the 0-based byte offset of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

// Surface syntax:
//   word  := term+          term := s(int) | s(int)* | u(int) | e(int)
//   proj  := p(shift,modulus) | 0
//   elem  := elem(num,shift,den,proj) | 0
//   zhat  := zhat(value,level)
//   germ  := germ(value,level; k,n,m)
//   pn    := pn(k,m)
// Whitespace is allowed between any two lexemes.

Word parse_word(std::string_view text);
Int parse_int(std::string_view text);
Projection parse_projection(std::string_view text);
Element parse_element(std::string_view text);
TruncatedProfinite parse_zhat(std::string_view text);
Germ parse_germ(std::string_view text);
PElem parse_pelem(std::string_view text);

/// The empty word prints as u(0).
std::string to_text(const Word& w);
std::string to_text(const Projection& p);
std::string to_text(const Element& v);
std::string to_text(const TruncatedProfinite& r);
std::string to_text(const Germ& g);
std::string to_text(const PElem& s);
std::string to_text(const FilterSet& f);

}  // namespace germkit
