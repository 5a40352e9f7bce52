#include "strictify/strict.hpp"

#include <functional>

#include "strictify/syntax.hpp"

namespace strictify {

ObjD operator+(const ObjD& a, const ObjD& b) {
  ObjD out = a;
  out.wires.insert(out.wires.end(), b.wires.begin(), b.wires.end());
  return out;
}

std::vector<std::string> flatten(const ObjD& x) {
  std::vector<std::string> out;
  for (const ObjC& w : x.wires) {
    auto part = flatten(w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// MorD

struct MorD::Node {
  Kind kind = Kind::Id;
  ObjD wires;
  std::optional<MorC> lifted;
  ObjC a;
  ObjC b;
  std::optional<MorD> first;
  std::optional<MorD> second;
};

MorD MorD::id(ObjD x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->wires = std::move(x);
  return MorD(std::move(n));
}

MorD MorD::lift(MorC f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lift;
  n->lifted = std::move(f);
  return MorD(std::move(n));
}

MorD MorD::pack(ObjC a, ObjC b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pack;
  n->a = std::move(a);
  n->b = std::move(b);
  return MorD(std::move(n));
}

MorD MorD::unpack(ObjC a, ObjC b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unpack;
  n->a = std::move(a);
  n->b = std::move(b);
  return MorD(std::move(n));
}

MorD MorD::unit_intro() {
  static const MorD instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::UnitIntro;
    return MorD(std::move(n));
  }();
  return instance;
}

MorD MorD::unit_elim() {
  static const MorD instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::UnitElim;
    return MorD(std::move(n));
  }();
  return instance;
}

MorD MorD::comp(MorD f, MorD g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comp;
  n->first = std::move(f);
  n->second = std::move(g);
  return MorD(std::move(n));
}

MorD MorD::tensor(MorD f, MorD g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->first = std::move(f);
  n->second = std::move(g);
  return MorD(std::move(n));
}

MorD::Kind MorD::kind() const { return node_->kind; }
const ObjD& MorD::wires() const { return node_->wires; }
const MorC& MorD::lifted() const { return *node_->lifted; }
const ObjC& MorD::left() const { return node_->a; }
const ObjC& MorD::right() const { return node_->b; }
const MorD& MorD::first() const { return *node_->first; }
const MorD& MorD::second() const { return *node_->second; }

bool MorD::is_adapter() const {
  switch (kind()) {
    case Kind::Pack:
    case Kind::Unpack:
    case Kind::UnitIntro:
    case Kind::UnitElim:
      return true;
    default:
      return false;
  }
}

bool MorD::is_primitive() const { return is_adapter() || kind() == Kind::Lift; }

bool operator==(const MorD& a, const MorD& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using K = MorD::Kind;
  switch (a.kind()) {
    case K::Id: return a.wires() == b.wires();
    case K::Lift: return a.lifted() == b.lifted();
    case K::Pack:
    case K::Unpack: return a.left() == b.left() && a.right() == b.right();
    case K::UnitIntro:
    case K::UnitElim: return true;
    case K::Comp:
    case K::Tensor: return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Typing

TypeD typecheck_d(const MorD& t, const Signature& sig) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id:
      for (const ObjC& w : t.wires().wires) sig.check_obj(w);
      return {t.wires(), t.wires()};
    case K::Lift: {
      TypeC c = typecheck_c(t.lifted(), sig);
      return {ObjD{c.dom}, ObjD{c.cod}};
    }
    case K::Pack:
      sig.check_obj(t.left());
      sig.check_obj(t.right());
      return {ObjD{t.left(), t.right()}, ObjD{t.left() * t.right()}};
    case K::Unpack:
      sig.check_obj(t.left());
      sig.check_obj(t.right());
      return {ObjD{t.left() * t.right()}, ObjD{t.left(), t.right()}};
    case K::UnitIntro: return {ObjD{}, ObjD{ObjC::unit()}};
    case K::UnitElim: return {ObjD{ObjC::unit()}, ObjD{}};
    case K::Comp: {
      TypeD a = typecheck_d(t.first(), sig);
      TypeD b = typecheck_d(t.second(), sig);
      if (!(a.cod == b.dom)) {
        throw Error(ErrorCode::TypeMismatch, "in composite '" + to_string(t) + "': codomain " +
                                                 to_string(a.cod) + " does not match domain " +
                                                 to_string(b.dom));
      }
      return {a.dom, b.cod};
    }
    case K::Tensor: {
      TypeD a = typecheck_d(t.first(), sig);
      TypeD b = typecheck_d(t.second(), sig);
      return {a.dom + b.dom, a.cod + b.cod};
    }
  }
  throw Error(ErrorCode::TypeMismatch, "malformed term");
}

namespace {
template <typename Pred>
std::size_t count_nodes(const MorD& t, Pred pred) {
  std::size_t n = pred(t) ? 1 : 0;
  if (t.kind() == MorD::Kind::Comp || t.kind() == MorD::Kind::Tensor) {
    n += count_nodes(t.first(), pred) + count_nodes(t.second(), pred);
  }
  return n;
}
}  // namespace

std::size_t count_adapters(const MorD& t) {
  return count_nodes(t, [](const MorD& m) { return m.is_adapter(); });
}

std::size_t count_lifts(const MorD& t) {
  return count_nodes(t, [](const MorD& m) { return m.kind() == MorD::Kind::Lift; });
}

bool is_adapter_only(const MorD& t) { return count_lifts(t) == 0; }

// ---------------------------------------------------------------------------
// Slices

MorD Slice::to_term() const {
  MorD term = gen;
  if (!left.empty()) term = MorD::tensor(MorD::id(left), term);
  if (!right.empty()) term = MorD::tensor(term, MorD::id(right));
  return term;
}

Slice make_slice(ObjD left, MorD gen, ObjD right, const Signature& sig) {
  if (!gen.is_primitive()) {
    throw Error(ErrorCode::Precondition, "slice generator must be a lift or an adapter");
  }
  TypeD type = typecheck_d(gen, sig);
  return Slice{std::move(left), std::move(gen), std::move(right), std::move(type.dom),
               std::move(type.cod)};
}

SeqNF seq_normal_form(const MorD& t, const Signature& sig) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id:
      for (const ObjC& w : t.wires().wires) sig.check_obj(w);
      return {t.wires(), {}};
    case K::Comp: {
      SeqNF a = seq_normal_form(t.first(), sig);
      SeqNF b = seq_normal_form(t.second(), sig);
      if (!(a.cod() == b.dom)) {
        throw Error(ErrorCode::TypeMismatch, "in composite '" + to_string(t) + "': codomain " +
                                                 to_string(a.cod()) + " does not match domain " +
                                                 to_string(b.dom));
      }
      a.slices.insert(a.slices.end(), b.slices.begin(), b.slices.end());
      return a;
    }
    case K::Tensor: {
      SeqNF a = seq_normal_form(t.first(), sig);
      SeqNF b = seq_normal_form(t.second(), sig);
      SeqNF out{a.dom + b.dom, {}};
      out.slices.reserve(a.slices.size() + b.slices.size());
      for (Slice s : a.slices) {
        s.right = s.right + b.dom;
        out.slices.push_back(std::move(s));
      }
      ObjD upper = a.cod();
      for (Slice s : b.slices) {
        s.left = upper + s.left;
        out.slices.push_back(std::move(s));
      }
      return out;
    }
    default: {
      Slice s = make_slice({}, t, {}, sig);
      ObjD dom = s.gen_dom;
      return {std::move(dom), {std::move(s)}};
    }
  }
}

MorD recompose(const SeqNF& nf) {
  if (nf.slices.empty()) return MorD::id(nf.dom);
  MorD term = nf.slices.front().to_term();
  for (std::size_t i = 1; i < nf.slices.size(); ++i) term = MorD::comp(term, nf.slices[i].to_term());
  return term;
}

// ---------------------------------------------------------------------------
// Inversion

MorD invert_d(const MorD& t) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Id: return t;
    case K::Lift:
      if (!is_structural(t.lifted())) {
        throw Error(ErrorCode::NotInvertible,
                    "lift of a generator-bearing term is not invertible: " + to_string(t));
      }
      return MorD::lift(invert_c(t.lifted()));
    case K::Pack: return MorD::unpack(t.left(), t.right());
    case K::Unpack: return MorD::pack(t.left(), t.right());
    case K::UnitIntro: return MorD::unit_elim();
    case K::UnitElim: return MorD::unit_intro();
    case K::Comp: return MorD::comp(invert_d(t.second()), invert_d(t.first()));
    case K::Tensor: return MorD::tensor(invert_d(t.first()), invert_d(t.second()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Random generation

namespace {
std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ObjD sub(const ObjD& x, std::size_t from, std::size_t to) {
  return ObjD(std::vector<ObjC>(x.wires.begin() + static_cast<std::ptrdiff_t>(from),
                                x.wires.begin() + static_cast<std::ptrdiff_t>(to)));
}
}  // namespace

ObjD random_objd(const Signature& sig, std::size_t max_wires, int depth_bound, Rng& rng) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_wires)(rng);
  ObjD x;
  for (std::size_t i = 0; i < n; ++i) x.wires.push_back(random_obj(sig, depth_bound, rng));
  return x;
}

MorD random_mor_d_from(const Signature& sig, const ObjD& dom, int depth_bound, bool adapters_only,
                       Rng& rng) {
  auto leaf = [&]() {
    std::vector<MorD> options{MorD::id(dom)};
    if (dom.size() == 1) {
      const ObjC& w = dom.wires[0];
      if (!adapters_only) {
        for (int i = 0; i < 2; ++i) options.push_back(MorD::lift(random_mor_from(sig, w, 2, rng)));
      }
      if (w.is_tensor()) {
        for (int i = 0; i < 2; ++i) options.push_back(MorD::unpack(w.left(), w.right()));
      }
      if (w.is_unit()) options.push_back(MorD::unit_elim());
    }
    if (dom.size() == 2) {
      for (int i = 0; i < 2; ++i) options.push_back(MorD::pack(dom.wires[0], dom.wires[1]));
    }
    if (dom.empty()) options.push_back(MorD::unit_intro());
    return options[pick(rng, options.size())];
  };
  if (depth_bound <= 1 || chance(rng, 0.15)) return leaf();
  if (chance(rng, 0.5)) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, dom.size())(rng);
    MorD f = random_mor_d_from(sig, sub(dom, 0, k), depth_bound - 1, adapters_only, rng);
    MorD g = random_mor_d_from(sig, sub(dom, k, dom.size()), depth_bound - 1, adapters_only, rng);
    return MorD::tensor(f, g);
  }
  MorD f = random_mor_d_from(sig, dom, depth_bound - 1, adapters_only, rng);
  ObjD mid = typecheck_d(f, sig).cod;
  MorD g = random_mor_d_from(sig, mid, depth_bound - 1, adapters_only, rng);
  return MorD::comp(f, g);
}

}  // namespace strictify
