#include "strictify/terms.hpp"

#include <algorithm>
#include <functional>

#include "strictify/syntax.hpp"

namespace strictify {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::FlatteningMismatch: return "FlatteningMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Precondition: return "PreconditionViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// ObjC

struct ObjC::Node {
  Kind kind = Kind::Unit;
  std::string name;
  ObjC left;
  ObjC right;
};

ObjC::ObjC() : node_(nullptr) {}

ObjC ObjC::base(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->name = std::move(name);
  return ObjC(std::move(node));
}

ObjC ObjC::tensor(ObjC left, ObjC right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tensor;
  node->left = std::move(left);
  node->right = std::move(right);
  return ObjC(std::move(node));
}

// A null node is the unit; this keeps default construction allocation-free.
ObjC::Kind ObjC::kind() const { return node_ ? node_->kind : Kind::Unit; }

const std::string& ObjC::name() const { return node_->name; }
const ObjC& ObjC::left() const { return node_->left; }
const ObjC& ObjC::right() const { return node_->right; }

bool operator==(const ObjC& a, const ObjC& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjC::Kind::Unit: return true;
    case ObjC::Kind::Base: return a.name() == b.name();
    case ObjC::Kind::Tensor: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator<(const ObjC& a, const ObjC& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case ObjC::Kind::Unit: return false;
    case ObjC::Kind::Base: return a.name() < b.name();
    case ObjC::Kind::Tensor:
      if (!(a.left() == b.left())) return a.left() < b.left();
      return a.right() < b.right();
  }
  return false;
}

// ---------------------------------------------------------------------------
// MorC

struct MorC::Node {
  Kind kind = Kind::Id;
  std::string name;
  std::array<ObjC, 3> objs;
  std::optional<MorC> first;
  std::optional<MorC> second;
};


MorC MorC::id(ObjC a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->objs[0] = std::move(a);
  return MorC(std::move(n));
}

MorC MorC::gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->name = std::move(name);
  return MorC(std::move(n));
}

MorC MorC::comp(MorC f, MorC g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comp;
  n->first = std::move(f);
  n->second = std::move(g);
  return MorC(std::move(n));
}

MorC MorC::tensor(MorC f, MorC g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->first = std::move(f);
  n->second = std::move(g);
  return MorC(std::move(n));
}

namespace {
template <typename Node>
std::shared_ptr<Node> structural_node(MorC::Kind k, ObjC a, ObjC b = {}, ObjC c = {}) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->objs = {std::move(a), std::move(b), std::move(c)};
  return n;
}
}  // namespace

MorC MorC::assoc(ObjC a, ObjC b, ObjC c) {
  return MorC(structural_node<Node>(Kind::Assoc, std::move(a), std::move(b), std::move(c)));
}
MorC MorC::assoc_inv(ObjC a, ObjC b, ObjC c) {
  return MorC(structural_node<Node>(Kind::AssocInv, std::move(a), std::move(b), std::move(c)));
}
MorC MorC::unit_l(ObjC a) { return MorC(structural_node<Node>(Kind::UnitL, std::move(a))); }
MorC MorC::unit_l_inv(ObjC a) { return MorC(structural_node<Node>(Kind::UnitLInv, std::move(a))); }
MorC MorC::unit_r(ObjC a) { return MorC(structural_node<Node>(Kind::UnitR, std::move(a))); }
MorC MorC::unit_r_inv(ObjC a) { return MorC(structural_node<Node>(Kind::UnitRInv, std::move(a))); }

MorC::Kind MorC::kind() const { return node_->kind; }
const std::string& MorC::name() const { return node_->name; }
const ObjC& MorC::obj(std::size_t i) const { return node_->objs.at(i); }
const MorC& MorC::first() const { return *node_->first; }
const MorC& MorC::second() const { return *node_->second; }

bool operator==(const MorC& a, const MorC& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using K = MorC::Kind;
  switch (a.kind()) {
    case K::Id:
    case K::UnitL:
    case K::UnitLInv:
    case K::UnitR:
    case K::UnitRInv:
      return a.obj(0) == b.obj(0);
    case K::Gen:
      return a.name() == b.name();
    case K::Comp:
    case K::Tensor:
      return a.first() == b.first() && a.second() == b.second();
    case K::Assoc:
    case K::AssocInv:
      return a.obj(0) == b.obj(0) && a.obj(1) == b.obj(1) && a.obj(2) == b.obj(2);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Signature

void Signature::check_obj(const ObjC& a) const {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return;
    case ObjC::Kind::Base:
      if (!has_object(a.name())) {
        throw Error(ErrorCode::UnknownName, "undeclared base object '" + a.name() + "'");
      }
      return;
    case ObjC::Kind::Tensor:
      check_obj(a.left());
      check_obj(a.right());
      return;
  }
}

void Signature::add_object(const std::string& name) {
  if (name == "I") throw Error(ErrorCode::DuplicateName, "'I' is reserved for the unit object");
  if (objects_.count(name) || generators_.count(name)) {
    throw Error(ErrorCode::DuplicateName, "duplicate name '" + name + "'");
  }
  objects_.insert(name);
}

void Signature::add_generator(const std::string& name, ObjC dom, ObjC cod) {
  if (objects_.count(name) || generators_.count(name)) {
    throw Error(ErrorCode::DuplicateName, "duplicate name '" + name + "'");
  }
  check_obj(dom);
  check_obj(cod);
  generators_.emplace(name, GenType{std::move(dom), std::move(cod)});
}

std::optional<GenType> Signature::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) return std::nullopt;
  return it->second;
}

Signature Signature::single_object(const std::string& name) {
  Signature sig;
  sig.add_object(name);
  return sig;
}

// ---------------------------------------------------------------------------
// Typechecking

namespace {

// With `sig == nullptr` object annotations are not validated and generators
// are rejected; this is the typing of purely structural terms.
TypeC infer(const MorC& f, const Signature* sig) {
  using K = MorC::Kind;
  auto check = [sig](const ObjC& a) {
    if (sig) sig->check_obj(a);
  };
  switch (f.kind()) {
    case K::Id:
      check(f.obj(0));
      return {f.obj(0), f.obj(0)};
    case K::Gen: {
      auto g = sig ? sig->generator(f.name()) : std::nullopt;
      if (!g) throw Error(ErrorCode::UnknownName, "undeclared generator '" + f.name() + "'");
      return {g->dom, g->cod};
    }
    case K::Comp: {
      TypeC a = infer(f.first(), sig);
      TypeC b = infer(f.second(), sig);
      if (!(a.cod == b.dom)) {
        throw Error(ErrorCode::TypeMismatch,
                    "in composite '" + to_string(f) + "': codomain " + to_string(a.cod) +
                        " of the first factor does not match domain " + to_string(b.dom) +
                        " of the second");
      }
      return {a.dom, b.cod};
    }
    case K::Tensor: {
      TypeC a = infer(f.first(), sig);
      TypeC b = infer(f.second(), sig);
      return {a.dom * b.dom, a.cod * b.cod};
    }
    case K::Assoc:
    case K::AssocInv: {
      for (std::size_t i = 0; i < 3; ++i) check(f.obj(i));
      ObjC right_nested = f.obj(0) * (f.obj(1) * f.obj(2));
      ObjC left_nested = (f.obj(0) * f.obj(1)) * f.obj(2);
      if (f.kind() == K::Assoc) return {right_nested, left_nested};
      return {left_nested, right_nested};
    }
    case K::UnitL:
      check(f.obj(0));
      return {ObjC::unit() * f.obj(0), f.obj(0)};
    case K::UnitLInv:
      check(f.obj(0));
      return {f.obj(0), ObjC::unit() * f.obj(0)};
    case K::UnitR:
      check(f.obj(0));
      return {f.obj(0) * ObjC::unit(), f.obj(0)};
    case K::UnitRInv:
      check(f.obj(0));
      return {f.obj(0), f.obj(0) * ObjC::unit()};
  }
  throw Error(ErrorCode::TypeMismatch, "malformed term");
}

}  // namespace

TypeC typecheck_c(const MorC& f, const Signature& sig) { return infer(f, &sig); }

TypeC structural_type(const MorC& f) { return infer(f, nullptr); }

// ---------------------------------------------------------------------------
// Structural helpers

namespace {
void flatten_into(const ObjC& a, std::vector<std::string>& out) {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return;
    case ObjC::Kind::Base: out.push_back(a.name()); return;
    case ObjC::Kind::Tensor:
      flatten_into(a.left(), out);
      flatten_into(a.right(), out);
      return;
  }
}
}  // namespace

std::vector<std::string> flatten(const ObjC& a) {
  std::vector<std::string> out;
  flatten_into(a, out);
  return out;
}

std::size_t objsize(const ObjC& a) {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return 0;
    case ObjC::Kind::Base: return 1;
    case ObjC::Kind::Tensor: return objsize(a.left()) + objsize(a.right());
  }
  return 0;
}

bool is_structural(const MorC& f) {
  switch (f.kind()) {
    case MorC::Kind::Gen: return false;
    case MorC::Kind::Comp:
    case MorC::Kind::Tensor:
      return is_structural(f.first()) && is_structural(f.second());
    default: return true;
  }
}

namespace {
ObjC substitute_at(const ObjC& shape, const std::vector<ObjC>& fill, std::size_t& next) {
  switch (shape.kind()) {
    case ObjC::Kind::Unit: return shape;
    case ObjC::Kind::Base: return fill[next++];
    case ObjC::Kind::Tensor: {
      ObjC l = substitute_at(shape.left(), fill, next);
      ObjC r = substitute_at(shape.right(), fill, next);
      return l * r;
    }
  }
  return shape;
}

std::vector<ObjC> slice_fill(const std::vector<ObjC>& fill, std::size_t from, std::size_t count) {
  return {fill.begin() + static_cast<std::ptrdiff_t>(from),
          fill.begin() + static_cast<std::ptrdiff_t>(from + count)};
}
}  // namespace

ObjC substitute(const ObjC& shape, const std::vector<ObjC>& fill) {
  if (objsize(shape) != fill.size()) {
    throw Error(ErrorCode::ArityMismatch, "shape " + to_string(shape) + " has " +
                                              std::to_string(objsize(shape)) + " leaves but " +
                                              std::to_string(fill.size()) + " fillers were given");
  }
  std::size_t next = 0;
  return substitute_at(shape, fill, next);
}

MorC substitute(const MorC& f, const std::vector<ObjC>& fill) {
  using K = MorC::Kind;
  switch (f.kind()) {
    case K::Id: return MorC::id(substitute(f.obj(0), fill));
    case K::Gen:
      throw Error(ErrorCode::Precondition, "cannot substitute into generator '" + f.name() + "'");
    case K::Comp:
      return MorC::comp(substitute(f.first(), fill), substitute(f.second(), fill));
    case K::Tensor: {
      std::size_t n = objsize(structural_type(f.first()).dom);
      if (n > fill.size()) throw Error(ErrorCode::ArityMismatch, "too few fillers for tensor");
      return MorC::tensor(substitute(f.first(), slice_fill(fill, 0, n)),
                          substitute(f.second(), slice_fill(fill, n, fill.size() - n)));
    }
    case K::Assoc:
    case K::AssocInv: {
      std::size_t na = objsize(f.obj(0));
      std::size_t nb = objsize(f.obj(1));
      std::size_t nc = objsize(f.obj(2));
      if (na + nb + nc != fill.size()) {
        throw Error(ErrorCode::ArityMismatch, "filler count does not match associator");
      }
      ObjC a = substitute(f.obj(0), slice_fill(fill, 0, na));
      ObjC b = substitute(f.obj(1), slice_fill(fill, na, nb));
      ObjC c = substitute(f.obj(2), slice_fill(fill, na + nb, nc));
      return f.kind() == K::Assoc ? MorC::assoc(a, b, c) : MorC::assoc_inv(a, b, c);
    }
    case K::UnitL: return MorC::unit_l(substitute(f.obj(0), fill));
    case K::UnitLInv: return MorC::unit_l_inv(substitute(f.obj(0), fill));
    case K::UnitR: return MorC::unit_r(substitute(f.obj(0), fill));
    case K::UnitRInv: return MorC::unit_r_inv(substitute(f.obj(0), fill));
  }
  return f;
}

MorC invert_c(const MorC& f) {
  using K = MorC::Kind;
  switch (f.kind()) {
    case K::Id: return f;
    case K::Gen:
      throw Error(ErrorCode::NotInvertible, "generator '" + f.name() + "' has no inverse");
    case K::Comp: return MorC::comp(invert_c(f.second()), invert_c(f.first()));
    case K::Tensor: return MorC::tensor(invert_c(f.first()), invert_c(f.second()));
    case K::Assoc: return MorC::assoc_inv(f.obj(0), f.obj(1), f.obj(2));
    case K::AssocInv: return MorC::assoc(f.obj(0), f.obj(1), f.obj(2));
    case K::UnitL: return MorC::unit_l_inv(f.obj(0));
    case K::UnitLInv: return MorC::unit_l(f.obj(0));
    case K::UnitR: return MorC::unit_r_inv(f.obj(0));
    case K::UnitRInv: return MorC::unit_r(f.obj(0));
  }
  return f;
}

std::array<std::size_t, 10> count_kinds(const MorC& f) {
  std::array<std::size_t, 10> counts{};
  std::function<void(const MorC&)> walk = [&](const MorC& m) {
    ++counts[static_cast<std::size_t>(m.kind())];
    if (m.kind() == MorC::Kind::Comp || m.kind() == MorC::Kind::Tensor) {
      walk(m.first());
      walk(m.second());
    }
  };
  walk(f);
  return counts;
}

// ---------------------------------------------------------------------------
// Random generation

namespace {

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<MorC> leaf_moves(const Signature& sig, const ObjC& x) {
  std::vector<MorC> moves;
  moves.push_back(MorC::id(x));
  for (const auto& [name, type] : sig.generators()) {
    if (type.dom == x) {
      // generators are weighted up so that they actually show up in samples
      for (int i = 0; i < 3; ++i) moves.push_back(MorC::gen(name));
    }
  }
  if (x.is_tensor()) {
    if (x.right().is_tensor()) moves.push_back(MorC::assoc(x.left(), x.right().left(), x.right().right()));
    if (x.left().is_tensor()) moves.push_back(MorC::assoc_inv(x.left().left(), x.left().right(), x.right()));
    if (x.left().is_unit()) moves.push_back(MorC::unit_l(x.right()));
    if (x.right().is_unit()) moves.push_back(MorC::unit_r(x.left()));
  }
  moves.push_back(MorC::unit_l_inv(x));
  moves.push_back(MorC::unit_r_inv(x));
  return moves;
}

}  // namespace

ObjC random_obj(const Signature& sig, int depth_bound, Rng& rng) {
  const auto& objects = sig.objects();
  auto random_leaf = [&]() {
    if (objects.empty() || chance(rng, 0.25)) return ObjC::unit();
    auto it = objects.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng, objects.size())));
    return ObjC::base(*it);
  };
  if (depth_bound <= 1 || chance(rng, 0.4)) return random_leaf();
  ObjC l = random_obj(sig, depth_bound - 1, rng);
  ObjC r = random_obj(sig, depth_bound - 1, rng);
  return l * r;
}

MorC random_mor_from(const Signature& sig, const ObjC& dom, int depth_bound, Rng& rng) {
  if (depth_bound <= 1 || chance(rng, 0.2)) {
    auto moves = leaf_moves(sig, dom);
    return moves[pick(rng, moves.size())];
  }
  if (dom.is_tensor() && chance(rng, 0.4)) {
    MorC f = random_mor_from(sig, dom.left(), depth_bound - 1, rng);
    MorC g = random_mor_from(sig, dom.right(), depth_bound - 1, rng);
    return MorC::tensor(f, g);
  }
  MorC f = random_mor_from(sig, dom, depth_bound - 1, rng);
  ObjC mid = typecheck_c(f, sig).cod;
  MorC g = random_mor_from(sig, mid, depth_bound - 1, rng);
  return MorC::comp(f, g);
}

MorC random_mor(const Signature& sig, int depth_bound, Rng& rng) {
  ObjC dom;
  const auto& gens = sig.generators();
  if (!gens.empty() && chance(rng, 0.5)) {
    auto it = gens.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng, gens.size())));
    dom = it->second.dom;
  } else {
    dom = random_obj(sig, 3, rng);
  }
  return random_mor_from(sig, dom, depth_bound, rng);
}

namespace {

struct LocalMove {
  std::vector<bool> path;  // false = descend left, true = descend right
  MorC move;
};

std::size_t count_units(const ObjC& x) {
  switch (x.kind()) {
    case ObjC::Kind::Unit: return 1;
    case ObjC::Kind::Base: return 0;
    case ObjC::Kind::Tensor: return count_units(x.left()) + count_units(x.right());
  }
  return 0;
}

void collect_moves(const ObjC& x, std::vector<bool>& path, bool allow_growth,
                   std::vector<LocalMove>& out) {
  if (x.is_tensor()) {
    if (x.right().is_tensor()) out.push_back({path, MorC::assoc(x.left(), x.right().left(), x.right().right())});
    if (x.left().is_tensor()) out.push_back({path, MorC::assoc_inv(x.left().left(), x.left().right(), x.right())});
    if (x.left().is_unit()) out.push_back({path, MorC::unit_l(x.right())});
    if (x.right().is_unit()) out.push_back({path, MorC::unit_r(x.left())});
    path.push_back(false);
    collect_moves(x.left(), path, allow_growth, out);
    path.back() = true;
    collect_moves(x.right(), path, allow_growth, out);
    path.pop_back();
  }
  if (allow_growth) {
    out.push_back({path, MorC::unit_l_inv(x)});
    out.push_back({path, MorC::unit_r_inv(x)});
  }
}

/// Wraps a local move at `path` inside `x` with identities on the untouched parts.
MorC wrap_move(const ObjC& x, const std::vector<bool>& path, std::size_t depth, const MorC& move) {
  if (depth == path.size()) return move;
  if (!path[depth]) return MorC::tensor(wrap_move(x.left(), path, depth + 1, move), MorC::id(x.right()));
  return MorC::tensor(MorC::id(x.left()), wrap_move(x.right(), path, depth + 1, move));
}

}  // namespace

MorC random_structural_walk(const ObjC& dom, int steps, Rng& rng) {
  ObjC current = dom;
  std::optional<MorC> result;
  for (int i = 0; i < steps; ++i) {
    std::vector<LocalMove> moves;
    std::vector<bool> path;
    collect_moves(current, path, count_units(current) < 2 && chance(rng, 0.3), moves);
    if (moves.empty()) break;
    const LocalMove& m = moves[pick(rng, moves.size())];
    MorC step = wrap_move(current, m.path, 0, m.move);
    current = structural_type(step).cod;
    result = result ? MorC::comp(*result, step) : step;
  }
  return result ? *result : MorC::id(dom);
}

}  // namespace strictify
