#include "strictify/functors.hpp"

#include "strictify/syntax.hpp"

namespace strictify {

namespace {

ObjD tail(const ObjD& x, std::size_t from) {
  return ObjD(std::vector<ObjC>(x.wires.begin() + static_cast<std::ptrdiff_t>(from), x.wires.end()));
}

MorD idw(const ObjC& a) { return MorD::id(ObjD{a}); }

bool is_identity_image(const MorC& f) {
  if (f.kind() == MorC::Kind::Id) return true;
  if (f.kind() == MorC::Kind::Tensor) return is_identity_image(f.first()) && is_identity_image(f.second());
  return false;
}

}  // namespace

ObjD strictify_obj(const ObjC& a) { return ObjD{a}; }

ObjC nonstrictify_obj(const ObjD& x) {
  if (x.empty()) return ObjC::unit();
  ObjC out = x.wires.back();
  for (std::size_t i = x.size() - 1; i-- > 0;) out = ObjC::tensor(x.wires[i], out);
  return out;
}

MorD strictify_shallow(const MorC& f, const Signature& sig) {
  typecheck_c(f, sig);
  return MorD::lift(f);
}

MorD strictify_expand(const MorC& f, const Signature& sig) {
  using K = MorC::Kind;
  switch (f.kind()) {
    case K::Id:
      sig.check_obj(f.obj(0));
      return idw(f.obj(0));
    case K::Gen:
      typecheck_c(f, sig);
      return MorD::lift(f);
    case K::Comp: {
      typecheck_c(f, sig);
      return MorD::comp(strictify_expand(f.first(), sig), strictify_expand(f.second(), sig));
    }
    case K::Tensor: {
      TypeC l = typecheck_c(f.first(), sig);
      TypeC r = typecheck_c(f.second(), sig);
      MorD body = MorD::tensor(strictify_expand(f.first(), sig), strictify_expand(f.second(), sig));
      return MorD::comp(MorD::comp(MorD::unpack(l.dom, r.dom), body), MorD::pack(l.cod, r.cod));
    }
    default:
      typecheck_c(f, sig);
      return *expand_lift_head(f, sig);
  }
}

MorC nonstrictify_slice(const Slice& s) {
  using K = MorD::Kind;
  const ObjD& left = s.left;
  const ObjD& right = s.right;
  const MorD& q = s.gen;

  if (left.empty()) {
    if (right.empty()) {
      switch (q.kind()) {
        case K::Lift: return q.lifted();
        case K::Pack:
        case K::Unpack: return MorC::id(ObjC::tensor(q.left(), q.right()));
        default: return MorC::id(ObjC::unit());
      }
    }
    ObjC rest = nonstrictify_obj(right);
    switch (q.kind()) {
      case K::Lift: return MorC::tensor(q.lifted(), MorC::id(rest));
      case K::Pack: return MorC::assoc(q.left(), q.right(), rest);
      case K::Unpack: return MorC::assoc_inv(q.left(), q.right(), rest);
      case K::UnitIntro: return MorC::unit_l_inv(rest);
      default: return MorC::unit_l(rest);
    }
  }
  if (left.size() == 1 && right.empty()) {
    const ObjC& a = left.wires[0];
    switch (q.kind()) {
      case K::Lift: return MorC::tensor(MorC::id(a), q.lifted());
      case K::Pack:
      case K::Unpack:
        return MorC::tensor(MorC::id(a), MorC::tensor(MorC::id(q.left()), MorC::id(q.right())));
      case K::UnitIntro: return MorC::unit_r_inv(a);
      default: return MorC::unit_r(a);
    }
  }
  Slice inner{tail(left, 1), q, right, s.gen_dom, s.gen_cod};
  return MorC::tensor(MorC::id(left.wires[0]), nonstrictify_slice(inner));
}

MorC nonstrictify(const MorD& t, const Signature& sig) {
  SeqNF nf = seq_normal_form(t, sig);
  if (nf.slices.empty()) return MorC::id(nonstrictify_obj(nf.dom));
  if (nf.slices.size() == 1) return nonstrictify_slice(nf.slices.front());
  std::optional<MorC> out;
  for (const Slice& s : nf.slices) {
    MorC image = nonstrictify_slice(s);
    if (is_identity_image(image)) continue;
    out = out ? MorC::comp(*out, image) : image;
  }
  return out ? *out : MorC::id(nonstrictify_obj(nf.dom));
}

MorC psi_big(const ObjD& x, const ObjD& y) {
  if (x.empty() && y.empty()) return MorC::unit_l(ObjC::unit());
  if (y.empty()) return MorC::unit_r(nonstrictify_obj(x));
  if (x.empty()) return MorC::unit_l(nonstrictify_obj(y));
  const ObjC& a = x.wires[0];
  if (x.size() == 1) return MorC::id(ObjC::tensor(a, nonstrictify_obj(y)));
  ObjD rest = tail(x, 1);
  MorC reassoc = MorC::assoc_inv(a, nonstrictify_obj(rest), nonstrictify_obj(y));
  return MorC::comp(reassoc, MorC::tensor(MorC::id(a), psi_big(rest, y)));
}

MorC psi_small() { return MorC::id(ObjC::unit()); }

MorD epsilon(const ObjD& x) {
  if (x.empty()) return MorD::unit_elim();
  if (x.size() == 1) return MorD::id(x);
  ObjD rest = tail(x, 1);
  return MorD::comp(MorD::unpack(x.wires[0], nonstrictify_obj(rest)),
                    MorD::tensor(idw(x.wires[0]), epsilon(rest)));
}

MorC eta(const ObjC& a) { return MorC::id(a); }

std::string_view to_string(FunctorDirection d) {
  switch (d) {
    case FunctorDirection::StrictifyShallow: return "F_shallow";
    case FunctorDirection::StrictifyExpand: return "F_expand";
    case FunctorDirection::Nonstrictify: return "G";
  }
  return "?";
}

FunctorReport report_strictify(const MorC& f, bool expand, const Signature& sig) {
  FunctorReport r;
  r.input = to_string(f);
  r.direction = expand ? FunctorDirection::StrictifyExpand : FunctorDirection::StrictifyShallow;
  MorD out = expand ? strictify_expand(f, sig) : strictify_shallow(f, sig);
  r.output = to_string(out);
  TypeC tc = typecheck_c(f, sig);
  TypeD td = typecheck_d(out, sig);
  r.steps.push_back({"type", to_string(tc.dom) + " -> " + to_string(tc.cod) + "  maps to  " +
                                 to_string(td.dom) + " -> " + to_string(td.cod)});
  return r;
}

FunctorReport report_nonstrictify(const MorD& t, const Signature& sig) {
  FunctorReport r;
  r.input = to_string(t);
  r.direction = FunctorDirection::Nonstrictify;
  SeqNF nf = seq_normal_form(t, sig);
  for (const Slice& s : nf.slices) {
    r.steps.push_back({"slice", to_string(s.to_term()) + "  ->  " + to_string(nonstrictify_slice(s))});
  }
  r.output = to_string(nonstrictify(t, sig));
  return r;
}

}  // namespace strictify
