#include "strictify/syntax.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace strictify {

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const ObjC& a) {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return "I";
    case ObjC::Kind::Base: return a.name();
    case ObjC::Kind::Tensor: return "(" + to_string(a.left()) + " * " + to_string(a.right()) + ")";
  }
  return "?";
}

std::string to_string(const ObjD& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += "|";
    out += to_string(x.wires[i]);
  }
  return out + "]";
}

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string print_binary(bool is_comp, bool first_is_comp, bool second_is_comp,
                         bool second_is_tensor, const std::string& a, const std::string& b) {
  if (is_comp) return a + " ; " + (second_is_comp ? paren(b) : b);
  std::string left = first_is_comp ? paren(a) : a;
  std::string right = (second_is_comp || second_is_tensor) ? paren(b) : b;
  return left + " (*) " + right;
}

}  // namespace

std::string to_string(const MorC& f) {
  using K = MorC::Kind;
  auto o = [&f](std::size_t i) { return to_string(f.obj(i)); };
  switch (f.kind()) {
    case K::Id: return "id[" + o(0) + "]";
    case K::Gen: return f.name();
    case K::Assoc: return "alpha[" + o(0) + "," + o(1) + "," + o(2) + "]";
    case K::AssocInv: return "alpha'[" + o(0) + "," + o(1) + "," + o(2) + "]";
    case K::UnitL: return "lambda[" + o(0) + "]";
    case K::UnitLInv: return "lambda'[" + o(0) + "]";
    case K::UnitR: return "rho[" + o(0) + "]";
    case K::UnitRInv: return "rho'[" + o(0) + "]";
    case K::Comp:
    case K::Tensor:
      return print_binary(f.kind() == K::Comp, f.first().kind() == K::Comp,
                          f.second().kind() == K::Comp, f.second().kind() == K::Tensor,
                          to_string(f.first()), to_string(f.second()));
  }
  return "?";
}

std::string to_string(const MorD& t) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id: {
      std::string inner = to_string(t.wires());
      return "idD" + inner;
    }
    case K::Lift: return "lift(" + to_string(t.lifted()) + ")";
    case K::Pack: return "pack[" + to_string(t.left()) + "," + to_string(t.right()) + "]";
    case K::Unpack: return "unpack[" + to_string(t.left()) + "," + to_string(t.right()) + "]";
    case K::UnitIntro: return "unit+";
    case K::UnitElim: return "unit-";
    case K::Comp:
    case K::Tensor:
      return print_binary(t.kind() == K::Comp, t.first().kind() == K::Comp,
                          t.second().kind() == K::Comp, t.second().kind() == K::Tensor,
                          to_string(t.first()), to_string(t.second()));
  }
  return "?";
}

std::string to_string(const Signature& sig) {
  std::string out;
  for (const auto& name : sig.objects()) out += "obj " + name + "\n";
  for (const auto& [name, type] : sig.generators()) {
    out += "gen " + name + " : " + to_string(type.dom) + " -> " + to_string(type.cod) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok { Ident, LParen, RParen, LBrack, RBrack, Comma, Bar, Star, TensorOp, Semi, Arrow, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"I",       "id",     "alpha",  "alpha'", "lambda", "lambda'",
                                              "rho",     "rho'",   "pack",   "unpack", "unit+",  "unit-",
                                              "lift",    "idD",    "obj",    "gen"};
  return words;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::Parse, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    int l0 = line;
    int c0 = col;
    auto push = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l0, c0});
      advance(n);
    };
    if (s.compare(i, 3, "(*)") == 0) {
      push(Tok::TensorOp, 3);
    } else if (s.compare(i, 2, "->") == 0) {
      push(Tok::Arrow, 2);
    } else if (ident_start(c)) {
      std::size_t n = 1;
      while (i + n < s.size() && ident_char(s[i + n])) ++n;
      // Primed names and the unit adapters are single tokens.
      if (i + n < s.size() && s[i + n] == '\'') ++n;
      std::string_view word = s.substr(i, n);
      if (word == "unit" && i + n < s.size() && (s[i + n] == '+' || s[i + n] == '-')) ++n;
      push(Tok::Ident, n);
    } else {
      switch (c) {
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '[': push(Tok::LBrack, 1); break;
        case ']': push(Tok::RBrack, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case '|': push(Tok::Bar, 1); break;
        case '*': push(Tok::Star, 1); break;
        case ';': push(Tok::Semi, 1); break;
        case ':': push(Tok::Colon, 1); break;
        default: fail_at(l0, c0, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const char* w) const { return at(Tok::Ident) && peek().text == w; }

  Token expect(Tok k, const char* what) {
    if (!at(k)) error(std::string("expected ") + what + ", found " + describe(peek()));
    return toks_[pos_++];
  }

  [[noreturn]] void error(const std::string& msg) const { fail_at(peek().line, peek().col, msg); }

  void finish() {
    if (!at(Tok::End)) error("unexpected " + describe(peek()) + " after complete expression");
  }

  // obj := atom | atom '*' atom
  ObjC obj() {
    ObjC a = obj_atom();
    if (at(Tok::Star)) {
      ++pos_;
      ObjC b = obj_atom();
      if (at(Tok::Star)) error("ambiguous object: parenthesize chained '*'");
      return ObjC::tensor(a, b);
    }
    return a;
  }

  ObjC obj_atom() {
    if (at(Tok::LParen)) {
      ++pos_;
      ObjC a = obj();
      expect(Tok::RParen, "')'");
      return a;
    }
    Token t = expect(Tok::Ident, "an object");
    if (t.text == "I") return ObjC::unit();
    if (reserved_words().count(t.text)) fail_at(t.line, t.col, "reserved word '" + t.text + "' used as object");
    return ObjC::base(t.text);
  }

  // wires := '[' (obj ('|' obj)*)? ']'
  ObjD wires() {
    expect(Tok::LBrack, "'['");
    ObjD x;
    if (at(Tok::RBrack)) {
      ++pos_;
      return x;
    }
    x.wires.push_back(obj());
    while (at(Tok::Bar)) {
      ++pos_;
      x.wires.push_back(obj());
    }
    expect(Tok::RBrack, "']' or '|'");
    return x;
  }

  ObjD objd() {
    if (at(Tok::LBrack)) return wires();
    return ObjD{obj()};
  }

  std::vector<ObjC> obj_args(std::size_t n) {
    expect(Tok::LBrack, "'['");
    std::vector<ObjC> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) expect(Tok::Comma, "','");
      out.push_back(obj());
    }
    expect(Tok::RBrack, "']'");
    return out;
  }

  template <typename T, typename Atom>
  T binary(Atom atom) {
    // seq := tens (';' tens)* ; tens := atom ('(*)' atom)*
    auto tens = [&]() {
      T a = atom();
      while (at(Tok::TensorOp)) {
        ++pos_;
        a = T::tensor(a, atom());
      }
      return a;
    };
    T a = tens();
    while (at(Tok::Semi)) {
      ++pos_;
      a = T::comp(a, tens());
    }
    return a;
  }

  MorC mor_c() {
    return binary<MorC>([this] { return mor_c_atom(); });
  }

  MorC mor_c_atom() {
    if (at(Tok::LParen)) {
      ++pos_;
      MorC f = mor_c();
      expect(Tok::RParen, "')'");
      return f;
    }
    Token t = expect(Tok::Ident, "a morphism");
    const std::string& w = t.text;
    if (w == "id") return MorC::id(obj_args(1)[0]);
    if (w == "alpha" || w == "alpha'") {
      auto a = obj_args(3);
      return w == "alpha" ? MorC::assoc(a[0], a[1], a[2]) : MorC::assoc_inv(a[0], a[1], a[2]);
    }
    if (w == "lambda") return MorC::unit_l(obj_args(1)[0]);
    if (w == "lambda'") return MorC::unit_l_inv(obj_args(1)[0]);
    if (w == "rho") return MorC::unit_r(obj_args(1)[0]);
    if (w == "rho'") return MorC::unit_r_inv(obj_args(1)[0]);
    if (reserved_words().count(w)) fail_at(t.line, t.col, "'" + w + "' is not a C-morphism");
    if (w.back() == '\'') fail_at(t.line, t.col, "unknown primed name '" + w + "'");
    return MorC::gen(w);
  }

  MorD mor_d() {
    return binary<MorD>([this] { return mor_d_atom(); });
  }

  MorD mor_d_atom() {
    if (at(Tok::LParen)) {
      ++pos_;
      MorD t = mor_d();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token t = expect(Tok::Ident, "a D-morphism");
    const std::string& w = t.text;
    if (w == "lift") {
      expect(Tok::LParen, "'('");
      MorC f = mor_c();
      expect(Tok::RParen, "')'");
      return MorD::lift(f);
    }
    if (w == "pack" || w == "unpack") {
      auto a = obj_args(2);
      return w == "pack" ? MorD::pack(a[0], a[1]) : MorD::unpack(a[0], a[1]);
    }
    if (w == "unit+") return MorD::unit_intro();
    if (w == "unit-") return MorD::unit_elim();
    if (w == "idD") return MorD::id(wires());
    fail_at(t.line, t.col, "expected a D-morphism, found '" + w + "' (wrap C-terms in lift(...))");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjC parse_obj(std::string_view text) {
  Parser p(text);
  ObjC a = p.obj();
  p.finish();
  return a;
}

ObjD parse_objd(std::string_view text) {
  Parser p(text);
  ObjD x = p.objd();
  p.finish();
  return x;
}

MorC parse_mor_c(std::string_view text) {
  Parser p(text);
  MorC f = p.mor_c();
  p.finish();
  return f;
}

MorD parse_mor_d(std::string_view text) {
  Parser p(text);
  MorD t = p.mor_d();
  p.finish();
  return t;
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::vector<std::tuple<std::string, std::string, std::string, int>> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    auto rethrow = [line_no](const Error& e) -> void {
      if (e.code() == ErrorCode::Parse) {
        // Inner messages are relative to the expression; rebase onto the file line.
        std::string msg = e.what();
        auto colon = msg.find(':');
        throw Error(ErrorCode::Parse, std::to_string(line_no) + msg.substr(colon));
      }
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    };
    try {
      if (line.rfind("obj", 0) == 0 && (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
        std::istringstream words(line.substr(3));
        std::string name;
        std::string extra;
        if (!(words >> name)) fail_at(line_no, 4, "expected an object name");
        if (words >> extra) fail_at(line_no, 1, "trailing text after object name");
        if (!ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char)) {
          fail_at(line_no, 5, "invalid object name '" + name + "'");
        }
        if (reserved_words().count(name)) {
          throw Error(ErrorCode::DuplicateName, "'" + name + "' is a reserved word");
        }
        sig.add_object(name);
      } else if (line.rfind("gen", 0) == 0 && line.size() > 3 && std::isspace(static_cast<unsigned char>(line[3]))) {
        std::string rest = line.substr(3);
        auto colon = rest.find(':');
        auto arrow = rest.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
          fail_at(line_no, 1, "expected 'gen <name> : <obj> -> <obj>'");
        }
        std::istringstream nm(rest.substr(0, colon));
        std::string name;
        std::string extra;
        if (!(nm >> name) || (nm >> extra)) fail_at(line_no, 5, "expected one generator name");
        if (!ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char)) {
          fail_at(line_no, 5, "invalid generator name '" + name + "'");
        }
        if (reserved_words().count(name)) {
          throw Error(ErrorCode::DuplicateName, "'" + name + "' is a reserved word");
        }
        std::string dom = rest.substr(colon + 1, arrow - colon - 1);
        std::string cod = rest.substr(arrow + 2);
        // Syntax is checked now; names are resolved once all objects are declared.
        parse_obj(dom);
        parse_obj(cod);
        gens.emplace_back(name, dom, cod, line_no);
      } else {
        fail_at(line_no, 1, "expected 'obj' or 'gen' declaration");
      }
    } catch (const Error& e) {
      rethrow(e);
    }
  }
  for (const auto& [name, dom, cod, ln] : gens) {
    try {
      sig.add_generator(name, parse_obj(dom), parse_obj(cod));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return sig;
}

}  // namespace strictify
