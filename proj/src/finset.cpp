#include "strictify/finset.hpp"

#include <charconv>
#include <sstream>

#include "strictify/syntax.hpp"

namespace strictify {

Element::Element() = default;

Element Element::atom(std::uint32_t index) {
  Element e;
  e.kind_ = Kind::Atom;
  e.index_ = index;
  return e;
}

Element Element::pair(Element a, Element b) {
  Element e;
  e.kind_ = Kind::Pair;
  e.children_ = std::make_shared<const std::pair<Element, Element>>(std::move(a), std::move(b));
  return e;
}

const Element& Element::first() const { return children_->first; }
const Element& Element::second() const { return children_->second; }

bool operator==(const Element& a, const Element& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Element::Kind::Unit: return true;
    case Element::Kind::Atom: return a.index_ == b.index_;
    case Element::Kind::Pair:
      return a.children_ == b.children_ || (a.first() == b.first() && a.second() == b.second());
  }
  return false;
}

bool operator<(const Element& a, const Element& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  switch (a.kind_) {
    case Element::Kind::Unit: return false;
    case Element::Kind::Atom: return a.index_ < b.index_;
    case Element::Kind::Pair:
      if (!(a.first() == b.first())) return a.first() < b.first();
      return a.second() < b.second();
  }
  return false;
}

std::string to_string(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::Unit: return "()";
    case Element::Kind::Atom: return "a" + std::to_string(e.index());
    case Element::Kind::Pair: return "<" + to_string(e.first()) + "," + to_string(e.second()) + ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& v, int line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(ErrorCode::Parse, std::to_string(line) + ":1: expected a non-negative integer, found '" + v + "'");
  }
  return out;
}

}  // namespace

ModelConfig parse_model_config(std::string_view text) {
  ModelConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::Parse, std::to_string(line) + ":1: expected key=value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "seed") {
      cfg.seed = parse_uint(value, line);
    } else if (key == "default_size") {
      cfg.default_size = static_cast<std::uint32_t>(parse_uint(value, line));
      if (cfg.default_size == 0) throw Error(ErrorCode::Parse, std::to_string(line) + ":1: carrier size must be positive");
    } else if (key.rfind("size.", 0) == 0 && key.size() > 5) {
      auto n = static_cast<std::uint32_t>(parse_uint(value, line));
      if (n == 0) throw Error(ErrorCode::Parse, std::to_string(line) + ":1: carrier size must be positive");
      cfg.sizes[key.substr(5)] = n;
    } else {
      throw Error(ErrorCode::Parse, std::to_string(line) + ":1: unknown key '" + key + "'");
    }
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Model

FinModel::FinModel(const Signature& sig, ModelConfig config) : sig_(sig), config_(std::move(config)) {
  for (const auto& entry : config_.sizes) {
    if (!sig_.has_object(entry.first)) {
      throw Error(ErrorCode::UnknownName, "model sizes unknown object '" + entry.first + "'");
    }
  }
  Rng rng(config_.seed);
  for (const auto& [name, type] : sig_.generators()) {
    const auto& dom = carrier(type.dom);
    const auto& cod = carrier(type.cod);
    std::uniform_int_distribution<std::size_t> pick(0, cod.size() - 1);
    auto& table = gens_[name];
    for (const Element& x : dom) table.emplace(x, cod[pick(rng)]);
  }
}

std::uint32_t FinModel::size_of(const std::string& base) const {
  if (!sig_.has_object(base)) throw Error(ErrorCode::UnknownName, "unknown object '" + base + "'");
  auto it = config_.sizes.find(base);
  return it == config_.sizes.end() ? config_.default_size : it->second;
}

const std::vector<Element>& FinModel::carrier(const ObjC& a) const {
  auto it = carriers_.find(a);
  if (it != carriers_.end()) return it->second;
  std::vector<Element> out;
  switch (a.kind()) {
    case ObjC::Kind::Unit: out.push_back(Element::unit()); break;
    case ObjC::Kind::Base: {
      std::uint32_t n = size_of(a.name());
      for (std::uint32_t i = 0; i < n; ++i) out.push_back(Element::atom(i));
      break;
    }
    case ObjC::Kind::Tensor: {
      const auto left = carrier(a.left());
      const auto right = carrier(a.right());
      out.reserve(left.size() * right.size());
      for (const Element& x : left) {
        for (const Element& y : right) out.push_back(Element::pair(x, y));
      }
      break;
    }
  }
  return carriers_.emplace(a, std::move(out)).first->second;
}

std::vector<Tuple> FinModel::carrier(const ObjD& x) const {
  std::vector<Tuple> out{Tuple{}};
  for (const ObjC& w : x.wires) {
    const auto& c = carrier(w);
    std::vector<Tuple> next;
    next.reserve(out.size() * c.size());
    for (const Tuple& t : out) {
      for (const Element& e : c) {
        Tuple u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

const std::map<Element, Element>& FinModel::generator_table(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw Error(ErrorCode::UnknownName, "unknown generator '" + name + "'");
  return it->second;
}

namespace {

[[noreturn]] void bad_input(const std::string& what, const Element& x) {
  throw Error(ErrorCode::TypeMismatch, what + " applied to ill-shaped element " + to_string(x));
}

const Element& expect_pair(const Element& x, const char* what) {
  if (x.kind() != Element::Kind::Pair) bad_input(what, x);
  return x;
}

}  // namespace

Element FinModel::apply(const MorC& f, const Element& x) const {
  using K = MorC::Kind;
  switch (f.kind()) {
    case K::Id: return x;
    case K::Gen: {
      const auto& table = generator_table(f.name());
      auto it = table.find(x);
      if (it == table.end()) bad_input(f.name(), x);
      return it->second;
    }
    case K::Comp: return apply(f.second(), apply(f.first(), x));
    case K::Tensor:
      expect_pair(x, "tensor");
      return Element::pair(apply(f.first(), x.first()), apply(f.second(), x.second()));
    case K::Assoc: {
      expect_pair(x, "alpha");
      const Element& bc = expect_pair(x.second(), "alpha");
      return Element::pair(Element::pair(x.first(), bc.first()), bc.second());
    }
    case K::AssocInv: {
      expect_pair(x, "alpha'");
      const Element& ab = expect_pair(x.first(), "alpha'");
      return Element::pair(ab.first(), Element::pair(ab.second(), x.second()));
    }
    case K::UnitL:
      expect_pair(x, "lambda");
      if (x.first().kind() != Element::Kind::Unit) bad_input("lambda", x);
      return x.second();
    case K::UnitLInv: return Element::pair(Element::unit(), x);
    case K::UnitR:
      expect_pair(x, "rho");
      if (x.second().kind() != Element::Kind::Unit) bad_input("rho", x);
      return x.first();
    case K::UnitRInv: return Element::pair(x, Element::unit());
  }
  return x;
}

namespace {

// Domain width without a full typecheck; terms reaching apply are already typed.
std::size_t dom_width(const MorD& t) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id: return t.wires().size();
    case K::Pack: return 2;
    case K::UnitIntro: return 0;
    case K::Comp: return dom_width(t.first());
    case K::Tensor: return dom_width(t.first()) + dom_width(t.second());
    default: return 1;
  }
}

}  // namespace

Tuple FinModel::apply(const MorD& t, const Tuple& x) const {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id: return x;
    case K::Lift: return Tuple{apply(t.lifted(), x.at(0))};
    case K::Pack: return Tuple{Element::pair(x.at(0), x.at(1))};
    case K::Unpack: {
      const Element& p = expect_pair(x.at(0), "unpack");
      return Tuple{p.first(), p.second()};
    }
    case K::UnitIntro: return Tuple{Element::unit()};
    case K::UnitElim: return Tuple{};
    case K::Comp: return apply(t.second(), apply(t.first(), x));
    case K::Tensor: {
      std::size_t k = dom_width(t.first());
      Tuple a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
      Tuple b(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
      Tuple out = apply(t.first(), a);
      Tuple rest = apply(t.second(), b);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }
  return x;
}

std::vector<Element> eval_obj(const ObjC& a, const FinModel& m) {
  m.signature().check_obj(a);
  return m.carrier(a);
}

Table eval_mor(const MorC& f, const FinModel& m) {
  TypeC type = typecheck_c(f, m.signature());
  Table t{{type.dom}, {type.cod}, {}, {}};
  for (const Element& x : m.carrier(type.dom)) {
    t.inputs.push_back(Tuple{x});
    t.outputs.push_back(Tuple{m.apply(f, x)});
  }
  return t;
}

Table eval_mor_d(const MorD& term, const FinModel& m) {
  TypeD type = typecheck_d(term, m.signature());
  Table t{type.dom.wires, type.cod.wires, m.carrier(type.dom), {}};
  t.outputs.reserve(t.inputs.size());
  for (const Tuple& x : t.inputs) t.outputs.push_back(m.apply(term, x));
  return t;
}

bool extensional_equal(const Table& x, const Table& y) {
  if (!(x.dom == y.dom)) {
    throw Error(ErrorCode::DomainMismatch, "tables have different domains");
  }
  if (!(x.cod == y.cod)) return false;
  return x.inputs == y.inputs && x.outputs == y.outputs;
}

}  // namespace strictify
