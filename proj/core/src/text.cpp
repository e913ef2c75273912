#include "germkit/text.hpp"

#include <cctype>

namespace germkit {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t pos() const { return pos_; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
    pos_ += kw.size();
  }

  bool lookahead(std::string_view kw) {
    skip_space();
    return text_.substr(pos_, kw.size()) == kw;
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    Int value(std::string(text_.substr(digits, pos_ - digits)));
    return negative ? Int(-value) : value;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(pos, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Int nonzero_arg(Cursor& c) {
  c.skip_space();
  std::size_t at = c.pos();
  Int v = c.integer();
  if (v == 0) c.fail_at(at, "zero modulus");
  return v;
}

Projection projection(Cursor& c) {
  if (c.accept('0')) return Projection::zero();
  std::size_t at = c.pos();
  c.expect('p');
  c.expect('(');
  Int shift = c.integer();
  c.expect(',');
  Int modulus = c.integer();
  c.expect(')');
  if (modulus == 0) c.fail_at(at, "zero modulus");
  return Projection::of_class(shift, modulus);
}

template <class F>
auto whole(std::string_view text, F&& f) {
  Cursor c(text);
  auto out = f(c);
  c.finish();
  return out;
}

template <class F>
auto guarded(Cursor& c, std::size_t at, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    c.fail_at(at, e.what());
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Cursor c(text);
  Word w;
  while (!c.at_end()) {
    char kind = c.peek();
    if (kind != 's' && kind != 'u' && kind != 'e') c.fail("expected term s(m), s(m)*, u(n) or e(m)");
    c.accept(kind);
    c.expect('(');
    if (kind == 'u') {
      w.push_back(Token::u(c.integer()));
      c.expect(')');
      continue;
    }
    Int m = nonzero_arg(c);
    c.expect(')');
    if (kind == 'e') {
      w.push_back(Token::e(m));
    } else if (c.accept('*')) {
      w.push_back(Token::s_star(m));
    } else {
      w.push_back(Token::s(m));
    }
  }
  if (w.empty()) c.fail("empty word");
  return w;
}

Int parse_int(std::string_view text) {
  return whole(text, [](Cursor& c) { return c.integer(); });
}

Projection parse_projection(std::string_view text) {
  return whole(text, [](Cursor& c) { return projection(c); });
}

Element parse_element(std::string_view text) {
  return whole(text, [](Cursor& c) {
    if (c.accept('0')) return Element::zero();
    std::size_t at = c.pos();
    c.expect_keyword("elem");
    c.expect('(');
    Int n = c.integer();
    c.expect(',');
    Int t = c.integer();
    c.expect(',');
    Int m = c.integer();
    c.expect(',');
    Projection dom = projection(c);
    c.expect(')');
    return guarded(c, at, [&] { return Element::make(n, t, m, dom); });
  });
}

TruncatedProfinite parse_zhat(std::string_view text) {
  return whole(text, [](Cursor& c) {
    std::size_t at = c.pos();
    c.expect_keyword("zhat");
    c.expect('(');
    Int value = c.integer();
    c.expect(',');
    Int level = c.integer();
    c.expect(')');
    return guarded(c, at, [&] { return TruncatedProfinite::make(value, level); });
  });
}

Germ parse_germ(std::string_view text) {
  Cursor c(text);
  std::size_t at = c.pos();
  c.expect_keyword("germ");
  c.expect('(');
  Int value = c.integer();
  c.expect(',');
  Int level = c.integer();
  c.expect(';');
  Int k = c.integer();
  c.expect(',');
  Int n = c.integer();
  c.expect(',');
  Int m = c.integer();
  c.expect(')');
  c.finish();
  if (level <= 0) c.fail_at(at, "level must be positive");
  if (n == 0 || m == 0) c.fail_at(at, "degenerate affine map");
  // Membership failures are domain errors, not syntax errors.
  return germ_new(TruncatedProfinite::make(value, level), k, n, m);
}

PElem parse_pelem(std::string_view text) {
  return whole(text, [](Cursor& c) {
    std::size_t at = c.pos();
    c.expect_keyword("pn");
    c.expect('(');
    Int k = c.integer();
    c.expect(',');
    Int m = c.integer();
    c.expect(')');
    return guarded(c, at, [&] { return PElem::make(k, m); });
  });
}

std::string to_text(const Word& w) {
  if (w.empty()) return "u(0)";
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    switch (t.kind) {
      case Token::Kind::S:
        out += "s(" + t.value.str() + ")";
        break;
      case Token::Kind::SStar:
        out += "s(" + t.value.str() + ")*";
        break;
      case Token::Kind::U:
        out += "u(" + t.value.str() + ")";
        break;
      case Token::Kind::E:
        out += "e(" + t.value.str() + ")";
        break;
    }
  }
  return out;
}

std::string to_text(const Projection& p) {
  if (p.is_zero()) return "0";
  return "p(" + p.shift().str() + "," + p.modulus().str() + ")";
}

std::string to_text(const Element& v) {
  if (v.is_zero()) return "0";
  return "elem(" + v.num().str() + "," + v.shift().str() + "," + v.den().str() + "," +
         to_text(v.dom()) + ")";
}

std::string to_text(const TruncatedProfinite& r) {
  return "zhat(" + r.value().str() + "," + r.level().str() + ")";
}

std::string to_text(const Germ& g) {
  return "germ(" + g.base().value().str() + "," + g.base().level().str() + "; " + g.g().k().str() +
         "," + g.g().n().str() + "," + g.g().m().str() + ")";
}

std::string to_text(const PElem& s) { return "pn(" + s.k.str() + "," + s.m.str() + ")"; }

std::string to_text(const FilterSet& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (i) out += ", ";
    out += to_text(f.members[i]);
  }
  return out + "}";
}

}  // namespace germkit
