// Directed rewriting in the strict category: the functoriality, adapter,
// naturality and associator/unitor equations, and the normaliser built on
// top of them.

#include <algorithm>
#include <set>
#include <tuple>

#include "strictify/strict.hpp"
#include "strictify/syntax.hpp"

namespace strictify {

namespace {

class StepCounter {
 public:
  StepCounter(const RewriteOptions& opts, NormalizeStats* stats) : opts_(opts), stats_(stats) {}

  void step(const char* rule, std::string detail) {
    ++steps_;
    if (stats_) stats_->steps = steps_;
    if (opts_.max_steps != 0 && steps_ > opts_.max_steps) {
      throw Error(ErrorCode::BudgetExceeded,
                  "rewrite budget of " + std::to_string(opts_.max_steps) + " steps exhausted");
    }
    if (opts_.trace) opts_.trace->push_back({rule, std::move(detail)});
  }

  std::size_t steps() const { return steps_; }

 private:
  const RewriteOptions& opts_;
  NormalizeStats* stats_;
  std::size_t steps_ = 0;
};

// ---------------------------------------------------------------------------
// Functoriality: lift(id) -> idD, lift(f ; g) -> lift f ; lift g

MorD functoriality(const MorD& t, StepCounter& steps) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Lift: {
      const MorC& f = t.lifted();
      if (f.kind() == MorC::Kind::Id) {
        steps.step("functoriality", "lift(" + to_string(f) + ") -> identity");
        return MorD::id(ObjD{f.obj(0)});
      }
      if (f.kind() == MorC::Kind::Comp) {
        steps.step("functoriality", "split lift of composite " + to_string(f));
        return MorD::comp(functoriality(MorD::lift(f.first()), steps),
                          functoriality(MorD::lift(f.second()), steps));
      }
      return t;
    }
    case K::Comp:
      return MorD::comp(functoriality(t.first(), steps), functoriality(t.second(), steps));
    case K::Tensor:
      return MorD::tensor(functoriality(t.first(), steps), functoriality(t.second(), steps));
    default:
      return t;
  }
}

// ---------------------------------------------------------------------------
// Associator / unitor equations, plus lift(f * g) = unpack ; (lift f • lift g) ; pack

MorD seq(std::initializer_list<MorD> parts) {
  auto it = parts.begin();
  MorD out = *it++;
  for (; it != parts.end(); ++it) out = MorD::comp(out, *it);
  return out;
}

MorD idw(const ObjC& a) { return MorD::id(ObjD{a}); }

}  // namespace

std::optional<MorD> expand_lift_head(const MorC& f, const Signature& sig) {
  using K = MorC::Kind;
  const ObjC& a = f.obj(0);
  const ObjC& b = f.obj(1);
  const ObjC& c = f.obj(2);
  switch (f.kind()) {
    case K::Assoc:
      return seq({MorD::unpack(a, b * c), MorD::tensor(idw(a), MorD::unpack(b, c)),
                  MorD::tensor(MorD::pack(a, b), idw(c)), MorD::pack(a * b, c)});
    case K::AssocInv:
      return seq({MorD::unpack(a * b, c), MorD::tensor(MorD::unpack(a, b), idw(c)),
                  MorD::tensor(idw(a), MorD::pack(b, c)), MorD::pack(a, b * c)});
    case K::UnitL:
      return seq({MorD::unpack(ObjC::unit(), a), MorD::tensor(MorD::unit_elim(), idw(a))});
    case K::UnitLInv:
      return seq({MorD::tensor(MorD::unit_intro(), idw(a)), MorD::pack(ObjC::unit(), a)});
    case K::UnitR:
      return seq({MorD::unpack(a, ObjC::unit()), MorD::tensor(idw(a), MorD::unit_elim())});
    case K::UnitRInv:
      return seq({MorD::tensor(idw(a), MorD::unit_intro()), MorD::pack(a, ObjC::unit())});
    case K::Tensor: {
      TypeC l = typecheck_c(f.first(), sig);
      TypeC r = typecheck_c(f.second(), sig);
      return seq({MorD::unpack(l.dom, r.dom),
                  MorD::tensor(MorD::lift(f.first()), MorD::lift(f.second())),
                  MorD::pack(l.cod, r.cod)});
    }
    default:
      return std::nullopt;
  }
}

namespace {

MorD structural_expand(const MorD& t, const Signature& sig, StepCounter& steps) {
  using K = MorD::Kind;
  switch (t.kind()) {
    case K::Lift: {
      auto expanded = expand_lift_head(t.lifted(), sig);
      if (!expanded) return t;
      steps.step("structural-expand", "lift(" + to_string(t.lifted()) + ")");
      return structural_expand(*expanded, sig, steps);
    }
    case K::Comp:
      return MorD::comp(structural_expand(t.first(), sig, steps),
                        structural_expand(t.second(), sig, steps));
    case K::Tensor:
      return MorD::tensor(structural_expand(t.first(), sig, steps),
                          structural_expand(t.second(), sig, steps));
    default:
      return t;
  }
}

// ---------------------------------------------------------------------------
// Tree-level cancellation and naturality on composition chains

void chain_factors(const MorD& t, std::vector<MorD>& out) {
  if (t.kind() == MorD::Kind::Comp) {
    chain_factors(t.first(), out);
    chain_factors(t.second(), out);
  } else {
    out.push_back(t);
  }
}

MorD rebuild_chain(const std::vector<MorD>& factors, const ObjD& dom) {
  if (factors.empty()) return MorD::id(dom);
  MorD out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = MorD::comp(out, factors[i]);
  return out;
}

bool inverse_adapters(const MorD& a, const MorD& b) {
  using K = MorD::Kind;
  if (a.kind() == K::Pack && b.kind() == K::Unpack) return a.left() == b.left() && a.right() == b.right();
  if (a.kind() == K::Unpack && b.kind() == K::Pack) return a.left() == b.left() && a.right() == b.right();
  if (a.kind() == K::UnitIntro && b.kind() == K::UnitElim) return true;
  if (a.kind() == K::UnitElim && b.kind() == K::UnitIntro) return true;
  return false;
}

MorD adapter_cancel(const MorD& t, const Signature& sig, StepCounter& steps) {
  if (t.kind() == MorD::Kind::Tensor) {
    return MorD::tensor(adapter_cancel(t.first(), sig, steps), adapter_cancel(t.second(), sig, steps));
  }
  if (t.kind() != MorD::Kind::Comp) return t;
  ObjD dom = typecheck_d(t, sig).dom;
  std::vector<MorD> factors;
  chain_factors(t, factors);
  std::vector<MorD> kept;
  for (const MorD& raw : factors) {
    MorD f = adapter_cancel(raw, sig, steps);
    if (f.kind() == MorD::Kind::Id) continue;
    if (!kept.empty() && inverse_adapters(kept.back(), f)) {
      steps.step("adapter-cancel", to_string(kept.back()) + " ; " + to_string(f));
      kept.pop_back();
      continue;
    }
    kept.push_back(f);
  }
  return rebuild_chain(kept, dom);
}

MorD naturality_slide(const MorD& t, const Signature& sig, StepCounter& steps) {
  if (t.kind() == MorD::Kind::Tensor) {
    return MorD::tensor(naturality_slide(t.first(), sig, steps),
                        naturality_slide(t.second(), sig, steps));
  }
  if (t.kind() != MorD::Kind::Comp) return t;
  ObjD dom = typecheck_d(t, sig).dom;
  std::vector<MorD> factors;
  chain_factors(t, factors);
  for (MorD& f : factors) f = naturality_slide(f, sig, steps);

  auto lifted_tensor = [](const MorD& m) {
    return m.kind() == MorD::Kind::Lift && m.lifted().kind() == MorC::Kind::Tensor;
  };
  // One left-to-right sweep per factor bounds the work.
  const std::size_t passes = factors.size();
  for (std::size_t pass = 0; pass < passes; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      const MorD& a = factors[i];
      const MorD& b = factors[i + 1];
      if (a.kind() == MorD::Kind::Pack && lifted_tensor(b)) {
        // pack ; lift(f * g)  ->  (lift f • lift g) ; pack
        const MorC& fg = b.lifted();
        TypeC l = typecheck_c(fg.first(), sig);
        TypeC r = typecheck_c(fg.second(), sig);
        steps.step("naturality", "slide " + to_string(fg) + " across pack");
        MorD moved = MorD::tensor(MorD::lift(fg.first()), MorD::lift(fg.second()));
        factors[i] = moved;
        factors[i + 1] = MorD::pack(l.cod, r.cod);
        changed = true;
      } else if (lifted_tensor(a) && b.kind() == MorD::Kind::Unpack) {
        // lift(f * g) ; unpack  ->  unpack ; (lift f • lift g)
        const MorC& fg = a.lifted();
        TypeC l = typecheck_c(fg.first(), sig);
        TypeC r = typecheck_c(fg.second(), sig);
        steps.step("naturality", "slide " + to_string(fg) + " across unpack");
        factors[i] = MorD::unpack(l.dom, r.dom);
        factors[i + 1] = MorD::tensor(MorD::lift(fg.first()), MorD::lift(fg.second()));
        changed = true;
      }
    }
    if (!changed) break;
  }
  return rebuild_chain(factors, dom);
}

// ---------------------------------------------------------------------------
// Slice-level engine

ObjD sub(const ObjD& x, std::size_t from, std::size_t to) {
  return ObjD(std::vector<ObjC>(x.wires.begin() + static_cast<std::ptrdiff_t>(from),
                                x.wires.begin() + static_cast<std::ptrdiff_t>(to)));
}

bool unit_like(const ObjC& a) { return objsize(a) == 0; }

// A maker builds one unit-like wire from nothing (unit+ is the smallest); a
// killer is the inverse. The engine fuses adapter blocks into these so that
// a created unit-like wire is one slice, which can then trade places with an
// identical neighbouring wire.
bool is_maker(const Slice& s) {
  return s.gen_dom.empty() && s.gen_cod.size() == 1 && unit_like(s.gen_cod.wires[0]) && count_lifts(s.gen) == 0;
}
bool is_killer(const Slice& s) {
  return s.gen_cod.empty() && s.gen_dom.size() == 1 && unit_like(s.gen_dom.wires[0]) && count_lifts(s.gen) == 0;
}

MorD make_term(const ObjC& y) {
  if (y.is_unit()) return MorD::unit_intro();
  return MorD::comp(MorD::tensor(make_term(y.left()), make_term(y.right())), MorD::pack(y.left(), y.right()));
}

MorD kill_term(const ObjC& y) {
  if (y.is_unit()) return MorD::unit_elim();
  return MorD::comp(MorD::unpack(y.left(), y.right()), MorD::tensor(kill_term(y.left()), kill_term(y.right())));
}

Slice maker(const ObjD& left, const ObjC& y, const ObjD& right) {
  return Slice{left, make_term(y), right, ObjD{}, ObjD{y}};
}

Slice killer(const ObjD& left, const ObjC& y, const ObjD& right) {
  return Slice{left, kill_term(y), right, ObjD{y}, ObjD{}};
}

/// Unit-like wire a maker or killer acts on.
const ObjC& unit_wire(const Slice& s) { return is_maker(s) ? s.gen_cod.wires[0] : s.gen_dom.wires[0]; }

/// Makers and killers sit at the leftmost position of their run of identical
/// wires; every position in the run denotes the same morphism.
bool unit_slide(Slice& s) {
  if (!is_maker(s) && !is_killer(s)) return false;
  const ObjC y = unit_wire(s);
  bool moved = false;
  while (!s.left.empty() && s.left.wires.back() == y) {
    s.right.wires.insert(s.right.wires.begin(), s.left.wires.back());
    s.left.wires.pop_back();
    moved = true;
  }
  return moved;
}

/// The slice itself, plus for a maker or killer every equivalent placement
/// inside its run of identical wires.
std::vector<Slice> unit_positions(const Slice& s) {
  const bool make = is_maker(s);
  if (!make && !is_killer(s)) return {s};
  const ObjC& y = unit_wire(s);
  const ObjD wires = make ? s.cod() : s.dom();
  const std::size_t p = s.left.size();
  std::size_t lo = p;
  while (lo > 0 && wires.wires[lo - 1] == y) --lo;
  std::size_t hi = p;
  while (hi + 1 < wires.size() && wires.wires[hi + 1] == y) ++hi;
  std::vector<Slice> out{s};
  for (std::size_t q = lo; q <= hi; ++q) {
    if (q == p) continue;
    out.push_back(Slice{sub(wires, 0, q), s.gen, sub(wires, q + 1, wires.size()), s.gen_dom, s.gen_cod});
  }
  return out;
}

/// For a;b acting on disjoint wires, returns (b', a') with b';a' = a;b.
std::optional<std::pair<Slice, Slice>> commute(const Slice& a, const Slice& b) {
  const std::size_t p = a.left.size();
  const std::size_t na = a.gen_cod.size();
  const std::size_t q = b.left.size();
  const std::size_t nb = b.gen_dom.size();
  if (q + nb <= p) {
    ObjD dom_a = a.dom();
    Slice b2{b.left, b.gen, sub(dom_a, q + nb, dom_a.size()), b.gen_dom, b.gen_cod};
    Slice a2{b.left + b.gen_cod + sub(a.left, q + nb, p), a.gen, a.right, a.gen_dom, a.gen_cod};
    return std::make_pair(std::move(b2), std::move(a2));
  }
  if (q >= p + na) {
    const std::size_t r0 = q - (p + na);
    Slice b2{a.left + a.gen_dom + sub(a.right, 0, r0), b.gen, b.right, b.gen_dom, b.gen_cod};
    Slice a2{a.left, a.gen, sub(a.right, 0, r0) + b.gen_cod + b.right, a.gen_dom, a.gen_cod};
    return std::make_pair(std::move(b2), std::move(a2));
  }
  return std::nullopt;
}

bool cancels(const Slice& a, const Slice& b) {
  if (a.left.size() != b.left.size()) return false;
  if (is_maker(a) && is_killer(b)) return a.gen_cod == b.gen_dom;
  if (is_killer(a) && is_maker(b)) return a.gen_dom == b.gen_cod;
  return inverse_adapters(a.gen, b.gen);
}

/// Slices replacing a;b when the two meet: nothing for an inverse pair.
std::optional<std::vector<Slice>> react(const Slice& a, const Slice& b) {
  if (cancels(a, b)) return std::vector<Slice>{};
  return std::nullopt;
}

/// A pack or unpack whose wires are all unit-like, rewritten as killers of
/// its inputs followed by makers of its outputs (the two agree by
/// coherence). Other slices are returned unchanged.
std::vector<Slice> decompose(const Slice& s) {
  const auto k = s.gen.kind();
  if (k != MorD::Kind::Pack && k != MorD::Kind::Unpack) return {s};
  if (!unit_like(k == MorD::Kind::Pack ? s.gen_cod.wires[0] : s.gen_dom.wires[0])) return {s};
  std::vector<Slice> out;
  for (std::size_t n = 0; n < s.gen_dom.size(); ++n) {
    out.push_back(killer(s.left, s.gen_dom.wires[n], sub(s.gen_dom, n + 1, s.gen_dom.size()) + s.right));
  }
  for (std::size_t n = 0; n < s.gen_cod.size(); ++n) {
    out.push_back(maker(s.left + sub(s.gen_cod, 0, n), s.gen_cod.wires[n], s.right));
  }
  return out;
}

/// Number of adapter pairs a cancellation of a with its inverse removes.
std::size_t pair_weight(const Slice& a) {
  if (is_maker(a) || is_killer(a)) return count_adapters(a.gen);
  return 1;
}

/// Primitive slices of a maker or killer, in a fixed order.
void defuse(const Slice& s, std::vector<Slice>& out) {
  if (!is_maker(s) && !is_killer(s)) {
    out.push_back(s);
    return;
  }
  const ObjC& y = unit_wire(s);
  if (y.is_unit()) {
    out.push_back(is_maker(s) ? Slice{s.left, MorD::unit_intro(), s.right, ObjD{}, ObjD{y}}
                              : Slice{s.left, MorD::unit_elim(), s.right, ObjD{y}, ObjD{}});
    return;
  }
  const ObjC& a = y.left();
  const ObjC& b = y.right();
  if (is_maker(s)) {
    defuse(maker(s.left, a, s.right), out);
    defuse(maker(s.left + ObjD{a}, b, s.right), out);
    out.push_back(Slice{s.left, MorD::pack(a, b), s.right, ObjD{a, b}, ObjD{y}});
  } else {
    out.push_back(Slice{s.left, MorD::unpack(a, b), s.right, ObjD{y}, ObjD{a, b}});
    defuse(killer(s.left, a, ObjD{b} + s.right), out);
    defuse(killer(s.left, b, s.right), out);
  }
}

class SliceEngine {
 public:
  SliceEngine(SeqNF nf, StepCounter& steps, NormalizeStats& stats)
      : nf_(std::move(nf)), steps_(steps), stats_(stats) {}

  SeqNF run() {
    std::vector<Slice> split;
    for (const Slice& s : nf_.slices) {
      for (Slice& d : decompose(s)) split.push_back(std::move(d));
    }
    if (split.size() != nf_.slices.size()) steps_.step("unit-split", "unit-like packs and unpacks split");
    nf_.slices = std::move(split);
    for (;;) {
      slide_units();
      const std::vector<Slice> before = nf_.slices;
      while (cancel_once()) {
      }
      order_canonically();
      slide_units();
      if (nf_.slices == before) break;
    }
    std::vector<Slice> flat;
    for (const Slice& s : nf_.slices) defuse(s, flat);
    nf_.slices = std::move(flat);
    return std::move(nf_);
  }

 private:
  void slide_units() {
    for (Slice& s : nf_.slices) {
      if (unit_slide(s)) {
        ++stats_.unit_slides;
        steps_.step("unit-slide", to_string(s.gen) + " moved left");
      }
    }
  }

  /// Cancels one inverse pair. The earlier slice is transported rightwards
  /// across independent slices until it meets its inverse. Makers and killers
  /// may change position within their run of identical wires on the way.
  bool cancel_once() {
    auto& s = nf_.slices;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].gen.is_adapter() && !is_maker(s[i]) && !is_killer(s[i])) continue;
      failed_.clear();
      std::vector<Slice> passed;
      std::vector<Slice> made;
      std::optional<std::size_t> hit = transport(i, i + 1, s[i], passed, made);
      if (!hit) continue;
      const std::size_t j = *hit;
      steps_.step("adapter-cancel", to_string(s[i].gen) + " ; " + to_string(s[j].gen) + " at wire " +
                                        std::to_string(s[i].left.size()));
      stats_.cancelled_pairs += made.empty() ? pair_weight(s[i]) : 1;
      std::vector<Slice> next(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
      for (Slice& m : passed) {
        unit_slide(m);
        next.push_back(std::move(m));
      }
      for (Slice& m : made) {
        unit_slide(m);
        next.push_back(std::move(m));
      }
      next.insert(next.end(), s.begin() + static_cast<std::ptrdiff_t>(j + 1), s.end());
      s = std::move(next);
      return true;
    }
    return false;
  }

  /// Depth-first search for a partner of `cur` at or after index j (see
  /// react). On success `passed` holds the slices cur was moved across,
  /// `made` the replacement, and the index of the partner is returned.
  std::optional<std::size_t> transport(std::size_t i, std::size_t j, const Slice& cur,
                                       std::vector<Slice>& passed, std::vector<Slice>& made) {
    const auto& s = nf_.slices;
    if (j >= s.size()) return std::nullopt;
    if (!failed_.insert({j, cur.left.size()}).second) return std::nullopt;
    for (const Slice& c : unit_positions(cur)) {
      for (const Slice& b : unit_positions(s[j])) {
        if (auto r = react(c, b)) {
          made = std::move(*r);
          return j;
        }
      }
    }
    for (const Slice& c : unit_positions(cur)) {
      for (const Slice& b : unit_positions(s[j])) {
        auto swapped = commute(c, b);
        if (!swapped) continue;
        passed.push_back(swapped->first);
        if (auto hit = transport(i, j + 1, swapped->second, passed, made)) return hit;
        passed.pop_back();
      }
    }
    return std::nullopt;
  }

  /// Total order on slices that may sit at the same point of a trace.
  static bool key_less(const Slice& a, const Slice& b) {
    if (a.left.size() != b.left.size()) return a.left.size() < b.left.size();
    if (a.gen_dom.size() != b.gen_dom.size()) return a.gen_dom.size() < b.gen_dom.size();
    const bool ua = is_maker(a) || is_killer(a);
    const bool ub = is_maker(b) || is_killer(b);
    if (ua != ub) return ua;
    if (ua) return unit_wire(a) < unit_wire(b);
    if (a.gen.kind() != b.gen.kind()) return a.gen.kind() < b.gen.kind();
    switch (a.gen.kind()) {
      case MorD::Kind::Pack:
      case MorD::Kind::Unpack:
        if (!(a.gen.left() == b.gen.left())) return a.gen.left() < b.gen.left();
        return a.gen.right() < b.gen.right();
      case MorD::Kind::Lift: return to_string(a.gen.lifted()) < to_string(b.gen.lifted());
      default: return false;
    }
  }

  struct Front {
    Slice front;
    std::vector<Slice> rest;
  };

  /// Moves rest[k] leftwards to the front by commutation (unit adapters may
  /// shift within unit runs) and reports the smallest front reachable.
  void pull_to_front(const std::vector<Slice>& rest, std::size_t m, const Slice& cur,
                     std::vector<Slice>& shifted, std::set<std::pair<std::size_t, std::size_t>>& seen,
                     std::optional<Front>& best, std::size_t k) {
    if (!seen.insert({m, cur.left.size()}).second) return;
    if (m == 0) {
      for (const Slice& c : unit_positions(cur)) {
        if (best && !key_less(c, best->front)) continue;
        Front f{c, {shifted.rbegin(), shifted.rend()}};
        f.rest.insert(f.rest.end(), rest.begin() + static_cast<std::ptrdiff_t>(k + 1), rest.end());
        best = std::move(f);
      }
      return;
    }
    for (const Slice& c : unit_positions(cur)) {
      for (const Slice& b : unit_positions(rest[m - 1])) {
        auto swapped = commute(b, c);
        if (!swapped) continue;
        shifted.push_back(swapped->second);
        pull_to_front(rest, m - 1, swapped->first, shifted, seen, best, k);
        shifted.pop_back();
      }
    }
  }

  /// Lexicographic normal form of the slice trace: repeatedly pull to the
  /// front the smallest slice that can be moved past everything before it.
  void order_canonically() {
    std::vector<Slice> rest = nf_.slices;
    std::vector<Slice> ordered;
    ordered.reserve(rest.size());
    while (!rest.empty()) {
      std::optional<Front> best;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        std::vector<Slice> shifted;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        pull_to_front(rest, k, rest[k], shifted, seen, best, k);
      }
      ordered.push_back(std::move(best->front));
      rest = std::move(best->rest);
      for (Slice& s : rest) unit_slide(s);
      stats_.commutations += 1;
    }
    nf_.slices = std::move(ordered);
  }

  SeqNF nf_;
  std::set<std::pair<std::size_t, std::size_t>> failed_;
  StepCounter& steps_;
  NormalizeStats& stats_;
};

MorD expand_all(const MorD& t, const Signature& sig, StepCounter& steps, NormalizeStats& stats) {
  MorD cur = t;
  for (;;) {
    std::size_t before = steps.steps();
    cur = functoriality(cur, steps);
    cur = structural_expand(cur, sig, steps);
    if (steps.steps() == before) return cur;
    stats.expansions += steps.steps() - before;
  }
}

}  // namespace

MorD apply_rules(const MorD& t, RuleSet rules, const Signature& sig, const RewriteOptions& opts) {
  TypeD before = typecheck_d(t, sig);
  StepCounter steps(opts, nullptr);
  MorD out = t;
  switch (rules) {
    case RuleSet::Functoriality: out = functoriality(t, steps); break;
    case RuleSet::AdapterCancel: out = adapter_cancel(t, sig, steps); break;
    case RuleSet::NaturalitySlide: out = naturality_slide(t, sig, steps); break;
    case RuleSet::StructuralExpand: out = structural_expand(t, sig, steps); break;
  }
  if (!(typecheck_d(out, sig) == before)) {
    throw Error(ErrorCode::TypeMismatch, "rewrite changed the type of " + to_string(t));
  }
  return out;
}

SeqNF normalize_slices(const MorD& t, const Signature& sig, const RewriteOptions& opts,
                       NormalizeStats* stats) {
  NormalizeStats local;
  NormalizeStats& st = stats ? *stats : local;
  StepCounter steps(opts, &st);
  typecheck_d(t, sig);
  MorD expanded = expand_all(t, sig, steps, st);
  SliceEngine engine(seq_normal_form(expanded, sig), steps, st);
  return engine.run();
}

MorD normalize_adapters(const MorD& t, const Signature& sig, const RewriteOptions& opts,
                        NormalizeStats* stats) {
  return recompose(normalize_slices(t, sig, opts, stats));
}

}  // namespace strictify
