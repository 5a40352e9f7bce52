#include "strictify/coherence.hpp"

#include <functional>

#include "strictify/functors.hpp"
#include "strictify/syntax.hpp"

namespace strictify {

namespace {

MorD pack_wire(const ObjC& a) {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return MorD::unit_intro();
    case ObjC::Kind::Base: return MorD::id(ObjD{a});
    case ObjC::Kind::Tensor:
      return MorD::comp(MorD::tensor(pack_wire(a.left()), pack_wire(a.right())),
                        MorD::pack(a.left(), a.right()));
  }
  return MorD::id(ObjD{a});
}

}  // namespace

ObjD flat_wires(const ObjD& x) {
  ObjD out;
  for (const auto& name : flatten(x)) out.wires.push_back(ObjC::base(name));
  return out;
}

MorD pack_obj(const ObjD& x) {
  if (x.empty()) return MorD::id(x);
  MorD out = pack_wire(x.wires[0]);
  for (std::size_t i = 1; i < x.size(); ++i) out = MorD::tensor(out, pack_wire(x.wires[i]));
  return out;
}

MorD unpack_obj(const ObjD& x) { return invert_d(pack_obj(x)); }

MorD canonical_unnormalized(const ObjD& a, const ObjD& b) {
  if (flatten(a) != flatten(b)) {
    throw Error(ErrorCode::FlatteningMismatch,
                "no canonical arrow from " + to_string(a) + " to " + to_string(b) +
                    ": flattened wire sequences differ");
  }
  MorD up = unpack_obj(a);
  MorD down = pack_obj(b);
  if (up.kind() == MorD::Kind::Id) return down.kind() == MorD::Kind::Id ? MorD::id(a) : down;
  if (down.kind() == MorD::Kind::Id) return up;
  return MorD::comp(up, down);
}

MorD canonical_d(const ObjD& a, const ObjD& b) {
  MorD raw = canonical_unnormalized(a, b);
  // Adapters never mention generators, so the base names alone type the term.
  Signature sig;
  for (const auto& name : flatten(a)) {
    if (!sig.has_object(name)) sig.add_object(name);
  }
  return normalize_adapters(raw, sig);
}

std::string_view to_string(EqVerdict::Kind k) {
  switch (k) {
    case EqVerdict::Kind::Equal: return "Equal";
    case EqVerdict::Kind::NotEqual: return "NotEqual";
    case EqVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

EqVerdict equal_structural(const MorC& f, const MorC& g, const Signature& sig, const FinModel* model) {
  TypeC tf = typecheck_c(f, sig);
  TypeC tg = typecheck_c(g, sig);
  if (!(tf.dom == tg.dom) || !(tf.cod == tg.cod)) {
    return {EqVerdict::Kind::NotEqual, "types differ: " + to_string(tf.dom) + " -> " + to_string(tf.cod) +
                                           " vs " + to_string(tg.dom) + " -> " + to_string(tg.cod)};
  }
  if (is_structural(f) && is_structural(g)) {
    return {EqVerdict::Kind::Equal, "both structural with the same endpoints (coherence)"};
  }
  if (f == g) return {EqVerdict::Kind::Equal, "syntactically identical"};
  MorD nf = normalize_adapters(strictify_expand(f, sig), sig);
  MorD ng = normalize_adapters(strictify_expand(g, sig), sig);
  if (nf == ng) return {EqVerdict::Kind::Equal, "identical adapter normal forms: " + to_string(nf)};
  if (model) {
    bool same = extensional_equal(eval_mor(f, *model), eval_mor(g, *model));
    if (same) return {EqVerdict::Kind::Equal, "equal tables in the supplied model"};
    return {EqVerdict::Kind::NotEqual, "the supplied model distinguishes the terms"};
  }
  return {EqVerdict::Kind::Unknown, "generator-bearing terms with different normal forms"};
}

MorC canonical_nat_iso(const ObjC& shape_a, const ObjC& shape_b, const std::vector<ObjC>& fill) {
  if (objsize(shape_a) != fill.size() || objsize(shape_b) != fill.size()) {
    throw Error(ErrorCode::ArityMismatch, "shapes " + to_string(shape_a) + " and " + to_string(shape_b) +
                                              " need " + std::to_string(fill.size()) + " leaves each");
  }
  // The shapes are read over one variable: every leaf is the same placeholder.
  std::vector<ObjC> placeholder(fill.size(), ObjC::base("W"));
  ObjC a = substitute(shape_a, placeholder);
  ObjC b = substitute(shape_b, placeholder);
  Signature sig = Signature::single_object("W");
  MorC over_w = nonstrictify(canonical_d(ObjD{a}, ObjD{b}), sig);
  return substitute(over_w, fill);
}

bool fg_singleton_check(const MorD& f, const Signature& sig) {
  TypeD type = typecheck_d(f, sig);
  if (type.dom.size() != 1 || type.cod.size() != 1) {
    throw Error(ErrorCode::Precondition, "endpoints must be single wires, got " + to_string(type.dom) +
                                             " -> " + to_string(type.cod));
  }
  std::function<bool(const MorD&)> structural_lifts = [&](const MorD& t) {
    if (t.kind() == MorD::Kind::Lift) return is_structural(t.lifted());
    if (t.kind() == MorD::Kind::Comp || t.kind() == MorD::Kind::Tensor) {
      return structural_lifts(t.first()) && structural_lifts(t.second());
    }
    return true;
  };
  if (!structural_lifts(f)) {
    throw Error(ErrorCode::Precondition, "term lifts a generator: " + to_string(f));
  }
  MorD round_trip = strictify_expand(nonstrictify(f, sig), sig);
  return normalize_adapters(round_trip, sig) == normalize_adapters(f, sig);
}

}  // namespace strictify
