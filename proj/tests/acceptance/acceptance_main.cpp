// Acceptance gate: one line per criterion, exit status 1 if any fails.
// Every check is exact; each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "strictify/coherence.hpp"
#include "strictify/commands.hpp"
#include "strictify/finset.hpp"
#include "strictify/functors.hpp"
#include "strictify/render.hpp"
#include "strictify/strict.hpp"
#include "strictify/syntax.hpp"
#include "strictify/terms.hpp"

using namespace strictify;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

ObjC W() { return ObjC::base("W"); }
const ObjC I{};

bool same_tables(const Table& a, const Table& b) {
  return a.dom == b.dom && a.cod == b.cod && extensional_equal(a, b);
}

// Object enumeration and adapter walks over one base object.

std::size_t units_in(const ObjC& a) {
  switch (a.kind()) {
    case ObjC::Kind::Unit: return 1;
    case ObjC::Kind::Base: return 0;
    default: return units_in(a.left()) + units_in(a.right());
  }
}

std::size_t units_in(const ObjD& x) {
  std::size_t n = 0;
  for (const ObjC& w : x.wires) n += units_in(w);
  return n;
}

/// All binary trees over leaves W and I with exactly w W-leaves and u I-leaves.
std::vector<ObjC> trees(std::size_t w, std::size_t u) {
  std::vector<ObjC> out;
  if (w + u == 1) {
    out.push_back(w == 1 ? W() : I);
    return out;
  }
  for (std::size_t lw = 0; lw <= w; ++lw) {
    for (std::size_t lu = 0; lu <= u; ++lu) {
      if (lw + lu == 0 || lw + lu == w + u) continue;
      for (const ObjC& l : trees(lw, lu)) {
        for (const ObjC& r : trees(w - lw, u - lu)) out.push_back(l * r);
      }
    }
  }
  return out;
}

/// Every object with at most max_w W-leaves and at most max_u unit leaves,
/// grouped by W count.
std::vector<std::vector<ObjC>> enumerate_objects(std::size_t max_w, std::size_t max_u) {
  std::vector<std::vector<ObjC>> by_w(max_w + 1);
  for (std::size_t w = 0; w <= max_w; ++w) {
    for (std::size_t u = 0; u <= max_u; ++u) {
      if (w + u == 0) continue;
      for (ObjC& t : trees(w, u)) by_w[w].push_back(std::move(t));
    }
  }
  return by_w;
}

MorD slice_term(const ObjD& left, const MorD& gen, const ObjD& right) {
  return MorD::tensor(MorD::tensor(MorD::id(left), gen), MorD::id(right));
}

ObjD range(const ObjD& x, std::size_t from, std::size_t to) {
  return ObjD(std::vector<ObjC>(x.wires.begin() + static_cast<std::ptrdiff_t>(from),
                                x.wires.begin() + static_cast<std::ptrdiff_t>(to)));
}

/// One random adapter step from x, keeping at most max_units unit leaves.
MorD random_step(const ObjD& x, std::size_t max_units, Rng& rng, ObjD& next) {
  for (;;) {
    switch (pick(rng, 4)) {
      case 0: {
        std::vector<std::size_t> cands;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x.wires[i].is_tensor()) cands.push_back(i);
        if (cands.empty()) break;
        std::size_t i = cands[pick(rng, cands.size())];
        const ObjC& a = x.wires[i];
        next = range(x, 0, i) + ObjD{a.left(), a.right()} + range(x, i + 1, x.size());
        return slice_term(range(x, 0, i), MorD::unpack(a.left(), a.right()), range(x, i + 1, x.size()));
      }
      case 1: {
        if (x.size() < 2) break;
        std::size_t i = pick(rng, x.size() - 1);
        const ObjC& a = x.wires[i];
        const ObjC& b = x.wires[i + 1];
        next = range(x, 0, i) + ObjD{a * b} + range(x, i + 2, x.size());
        return slice_term(range(x, 0, i), MorD::pack(a, b), range(x, i + 2, x.size()));
      }
      case 2: {
        if (units_in(x) >= max_units) break;
        std::size_t p = pick(rng, x.size() + 1);
        next = range(x, 0, p) + ObjD{I} + range(x, p, x.size());
        return slice_term(range(x, 0, p), MorD::unit_intro(), range(x, p, x.size()));
      }
      default: {
        std::vector<std::size_t> cands;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x.wires[i].is_unit()) cands.push_back(i);
        if (cands.empty()) break;
        std::size_t i = cands[pick(rng, cands.size())];
        next = range(x, 0, i) + range(x, i + 1, x.size());
        return slice_term(range(x, 0, i), MorD::unit_elim(), range(x, i + 1, x.size()));
      }
    }
  }
}

/// Composes factors with a random bracketing of ';'.
MorD random_comp(const std::vector<MorD>& fs, std::size_t lo, std::size_t hi, Rng& rng) {
  if (hi - lo == 1) return fs[lo];
  std::size_t mid = lo + 1 + pick(rng, hi - lo - 1);
  return MorD::comp(random_comp(fs, lo, mid, rng), random_comp(fs, mid, hi, rng));
}

/// Random adapter walk from x, then a fixed descent to the flat wire sequence.
std::vector<MorD> walk_to_flat(const ObjD& start, std::size_t max_units, std::size_t steps, Rng& rng) {
  std::vector<MorD> fs;
  ObjD x = start;
  for (std::size_t k = 0; k < steps; ++k) {
    ObjD next;
    fs.push_back(random_step(x, max_units, rng, next));
    x = std::move(next);
  }
  for (;;) {
    std::size_t i = 0;
    while (i < x.size() && x.wires[i].is_base()) ++i;
    if (i == x.size()) break;
    ObjD next;
    if (x.wires[i].is_unit()) {
      fs.push_back(slice_term(range(x, 0, i), MorD::unit_elim(), range(x, i + 1, x.size())));
      next = range(x, 0, i) + range(x, i + 1, x.size());
    } else {
      const ObjC& a = x.wires[i];
      fs.push_back(slice_term(range(x, 0, i), MorD::unpack(a.left(), a.right()), range(x, i + 1, x.size())));
      next = range(x, 0, i) + ObjD{a.left(), a.right()} + range(x, i + 1, x.size());
    }
    x = std::move(next);
  }
  return fs;
}

/// Random adapter-only composite [a] -> [b]; a and b have the same leaves.
MorD random_adapter_composite(const ObjC& a, const ObjC& b, std::size_t max_units, Rng& rng) {
  std::vector<MorD> fs = walk_to_flat(ObjD{a}, max_units, pick(rng, 7), rng);
  std::vector<MorD> back = walk_to_flat(ObjD{b}, max_units, pick(rng, 7), rng);
  for (auto it = back.rbegin(); it != back.rend(); ++it) fs.push_back(invert_d(*it));
  if (fs.empty()) return MorD::id(ObjD{a});
  return random_comp(fs, 0, fs.size(), rng);
}

// Criteria.

Signature four_generator_signature() {
  Signature sig;
  for (const char* n : {"X", "Y", "Z"}) sig.add_object(n);
  ObjC x = ObjC::base("X"), y = ObjC::base("Y"), z = ObjC::base("Z");
  sig.add_generator("f", x, y);
  sig.add_generator("g", y * z, x);
  sig.add_generator("h", I, z);
  sig.add_generator("k", x * y, z * I);
  return sig;
}

Outcome c1_round_trip_gf() {
  Signature sig = four_generator_signature();
  Rng rng(101);
  for (int n = 0; n < 1000; ++n) {
    MorC f = random_mor(sig, 6, rng);
    MorC back = nonstrictify(strictify_shallow(f, sig), sig);
    if (!(back == f)) return {false, "G(F f) differs for " + to_string(f) + ": " + to_string(back)};
  }
  return {true, "1000 terms, G(F f) == f syntactically"};
}

struct Equation {
  std::string family;
  MorD lhs;
  MorD rhs;
};

Outcome c2_equations_respected() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  ObjC x = ObjC::base("X"), y = ObjC::base("Y");
  sig.add_generator("u", x, y);
  sig.add_generator("v", y, x * y);
  sig.add_generator("w", x * y, y);
  Rng rng(202);
  FinModel model(sig, ModelConfig{7, 2, {}});
  std::set<std::string> families;
  auto small_obj = [&] { return random_obj(sig, 2, rng); };
  auto mor = [&](const ObjC& dom) { return random_mor_from(sig, dom, 2, rng); };
  for (int n = 0; n < 50; ++n) {
    ObjC a = small_obj(), b = small_obj(), c = small_obj();
    MorC f = mor(a);
    MorC g = mor(b);
    TypeC tf = typecheck_c(f, sig);
    TypeC tg = typecheck_c(g, sig);
    MorC f2 = mor(tf.cod);
    std::vector<Equation> eqs = {
        {"lift of identity", MorD::lift(MorC::id(a)), MorD::id(ObjD{a})},
        {"lift of composite", MorD::lift(MorC::comp(f, f2)), MorD::comp(MorD::lift(f), MorD::lift(f2))},
        {"pack naturality", MorD::comp(MorD::tensor(MorD::lift(f), MorD::lift(g)), MorD::pack(tf.cod, tg.cod)),
         MorD::comp(MorD::pack(a, b), MorD::lift(MorC::tensor(f, g)))},
        {"unpack naturality", MorD::comp(MorD::unpack(a, b), MorD::tensor(MorD::lift(f), MorD::lift(g))),
         MorD::comp(MorD::lift(MorC::tensor(f, g)), MorD::unpack(tf.cod, tg.cod))},
        {"pack then unpack", MorD::comp(MorD::pack(a, b), MorD::unpack(a, b)), MorD::id(ObjD{a, b})},
        {"unpack then pack", MorD::comp(MorD::unpack(a, b), MorD::pack(a, b)), MorD::id(ObjD{a * b})},
        {"unit intro then elim", MorD::comp(MorD::unit_intro(), MorD::unit_elim()), MorD::id(ObjD{})},
        {"unit elim then intro", MorD::comp(MorD::unit_elim(), MorD::unit_intro()), MorD::id(ObjD{I})},
    };
    for (auto [family, f0] : {std::pair<const char*, MorC>{"associator", MorC::assoc(a, b, c)},
                              {"associator inverse", MorC::assoc_inv(a, b, c)},
                              {"left unitor", MorC::unit_l(a)},
                              {"left unitor inverse", MorC::unit_l_inv(a)},
                              {"right unitor", MorC::unit_r(a)},
                              {"right unitor inverse", MorC::unit_r_inv(a)}}) {
      eqs.push_back({family, MorD::lift(f0), *expand_lift_head(f0, sig)});
    }
    for (const Equation& e : eqs) {
      families.insert(e.family);
      Table l = eval_mor(nonstrictify(e.lhs, sig), model);
      Table r = eval_mor(nonstrictify(e.rhs, sig), model);
      if (!same_tables(l, r)) {
        return {false, e.family + ": " + to_string(e.lhs) + " vs " + to_string(e.rhs)};
      }
    }
  }
  return {true, std::to_string(families.size()) + " families x 50 instances"};
}

Outcome c3_functor_laws() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  Rng rng(303);
  for (int n = 0; n < 100; ++n) {
    ObjC a = random_obj(sig, 2, rng), b = random_obj(sig, 2, rng), c = random_obj(sig, 2, rng);
    MorD path1 = MorD::comp(MorD::tensor(MorD::pack(a, b), MorD::id(ObjD{c})), MorD::pack(a * b, c));
    MorD path2 = MorD::comp(MorD::comp(MorD::tensor(MorD::id(ObjD{a}), MorD::pack(b, c)), MorD::pack(a, b * c)),
                            MorD::lift(MorC::assoc(a, b, c)));
    MorD left1 = MorD::comp(MorD::comp(MorD::tensor(MorD::unit_intro(), MorD::id(ObjD{a})), MorD::pack(I, a)),
                            MorD::lift(MorC::unit_l(a)));
    MorD right1 = MorD::comp(MorD::comp(MorD::tensor(MorD::id(ObjD{a}), MorD::unit_intro()), MorD::pack(a, I)),
                             MorD::lift(MorC::unit_r(a)));
    MorD ida = MorD::id(ObjD{a});
    if (!(normalize_adapters(path1, sig) == normalize_adapters(path2, sig))) {
      return {false, "associativity square differs at " + to_string(a) + ", " + to_string(b) + ", " + to_string(c)};
    }
    if (!(normalize_adapters(left1, sig) == normalize_adapters(ida, sig)) ||
        !(normalize_adapters(right1, sig) == normalize_adapters(ida, sig))) {
      return {false, "unit square differs at " + to_string(a)};
    }
  }
  return {true, "100 triples, associativity and both unit squares"};
}

Slice random_slice(const Signature& sig, Rng& rng) {
  ObjD left = random_objd(sig, 1, 1, rng);
  ObjD right = random_objd(sig, 1, 1, rng);
  MorD gen = MorD::unit_intro();
  switch (pick(rng, 5)) {
    case 0: {
      ObjC a = random_obj(sig, 1, rng);
      gen = MorD::lift(random_mor_from(sig, a, 2, rng));
      break;
    }
    case 1: gen = MorD::pack(random_obj(sig, 1, rng), random_obj(sig, 1, rng)); break;
    case 2: gen = MorD::unpack(random_obj(sig, 1, rng), random_obj(sig, 1, rng)); break;
    case 3: gen = MorD::unit_intro(); break;
    default: gen = MorD::unit_elim(); break;
  }
  return make_slice(left, gen, right, sig);
}

Outcome c4_equivalence() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  ObjC x = ObjC::base("X"), y = ObjC::base("Y");
  sig.add_generator("u", x, y);
  sig.add_generator("v", y * x, x);
  sig.add_generator("z", I, x);
  FinModel model(sig, ModelConfig{11, 2, {}});
  Rng rng(404);
  for (int n = 0; n < 200; ++n) {
    Slice s = random_slice(sig, rng);
    MorD t = s.to_term();
    MorD lhs = strictify_expand(nonstrictify(t, sig), sig);
    MorD rhs = MorD::comp(MorD::comp(epsilon(s.dom()), t), invert_d(epsilon(s.cod())));
    if (!same_tables(eval_mor_d(lhs, model), eval_mor_d(rhs, model))) {
      return {false, "naturality square fails for slice " + to_string(t)};
    }
  }
  return {true, "200 slices, F(G t) == eps ; t ; eps^-1 exhaustively"};
}

Outcome c5_canonicity() {
  Signature sig = Signature::single_object();
  auto by_w = enumerate_objects(4, 2);
  std::size_t total = 0;
  for (const auto& v : by_w) total += v.size();
  Rng rng(505);
  for (int n = 0; n < 1000; ++n) {
    const auto& pool = by_w[pick(rng, by_w.size())];
    ObjC a = pool[pick(rng, pool.size())];
    ObjC b = pool[pick(rng, pool.size())];
    MorD f = random_adapter_composite(a, b, 2, rng);
    MorD nf = normalize_adapters(f, sig);
    MorD can = canonical_d(ObjD{a}, ObjD{b});
    if (!(nf == can)) {
      return {false, to_string(a) + " -> " + to_string(b) + ": normal form " + to_string(nf) + " vs canonical " +
                         to_string(can)};
    }
    MorD round = normalize_adapters(MorD::comp(can, canonical_d(ObjD{b}, ObjD{a})), sig);
    if (!(round == MorD::id(ObjD{a}))) return {false, "canonical round trip at " + to_string(a) + " is " + to_string(round)};
  }
  return {true, std::to_string(total) + " objects, 1000 composites normalize to the canonical arrow"};
}

Outcome c6_coherence() {
  Signature sig = Signature::single_object();
  FinModel model(sig, ModelConfig{3, 2, {}});
  Rng rng(606);
  for (int n = 0; n < 500; ++n) {
    ObjC a = random_obj(sig, 3, rng);
    while (objsize(a) > 5) a = random_obj(sig, 3, rng);
    MorC f = random_structural_walk(a, static_cast<int>(pick(rng, 6)), rng);
    ObjC b = structural_type(f).cod;
    // g takes a different walk and then the canonical map to b.
    MorC walk = random_structural_walk(a, 1 + static_cast<int>(pick(rng, 6)), rng);
    ObjC x = structural_type(walk).cod;
    std::vector<ObjC> fill(objsize(a), W());
    MorC g = MorC::comp(walk, canonical_nat_iso(x, b, fill));
    EqVerdict v = equal_structural(f, g, sig);
    if (v.kind != EqVerdict::Kind::Equal) return {false, "verdict " + std::string(to_string(v.kind)) + ": " + v.reason};
    if (!same_tables(eval_mor(f, model), eval_mor(g, model))) {
      return {false, "oracle disagrees: " + to_string(f) + " vs " + to_string(g)};
    }
  }
  return {true, "500 parallel pairs Equal and table-equal with |W| = 2"};
}

Outcome c7_worked_example() {
  Signature sig = Signature::single_object();
  ObjC w = W();
  MorC got = nonstrictify(canonical_d(ObjD{w * (I * w)}, ObjD{(w * I) * w}), sig);
  MorC want = MorC::assoc(w, I, w);
  EqVerdict v = equal_structural(got, want, sig);
  FinModel model(sig, ModelConfig{1, 2, {}});
  bool ext = same_tables(eval_mor(got, model), eval_mor(want, model));
  bool ok = v.kind == EqVerdict::Kind::Equal && ext;
  return {ok, "G(canonical) = " + to_string(got)};
}

Outcome c8_bundler_cancellation() {
  Signature sig;
  for (const char* n : {"A", "As", "Ass"}) sig.add_object(n);
  ObjC a = ObjC::base("A"), as = ObjC::base("As"), ass = ObjC::base("Ass");
  sig.add_generator("eta", I, as * a);
  sig.add_generator("c", a * ass, ass * a);
  sig.add_generator("eps", as * ass, I);
  MorC b = MorC::unit_l_inv(ass);
  b = MorC::comp(b, MorC::tensor(MorC::gen("eta"), MorC::id(ass)));
  b = MorC::comp(b, MorC::assoc_inv(as, a, ass));
  b = MorC::comp(b, MorC::tensor(MorC::id(as), MorC::gen("c")));
  b = MorC::comp(b, MorC::assoc(as, ass, a));
  b = MorC::comp(b, MorC::tensor(MorC::gen("eps"), MorC::id(a)));
  b = MorC::comp(b, MorC::unit_l(a));
  typecheck_c(b, sig);
  MorD term = strictify_expand(b, sig);
  NormalizeStats stats;
  MorD nf = normalize_adapters(term, sig, {}, &stats);
  std::size_t adapters = count_adapters(nf);
  std::size_t columns = layout(nf, sig).columns.size();
  const std::size_t strict_slices = 3;
  bool ok = adapters == 0 && columns == strict_slices && stats.cancelled_pairs == 7;
  return {ok, std::to_string(stats.cancelled_pairs) + " pairs cancelled (want 7), " + std::to_string(adapters) +
                  " adapters remain (want 0), " + std::to_string(columns) + " columns (want " +
                  std::to_string(strict_slices) + ")"};
}

/// Independent oracle: the element of the fill-instantiated shape_a, taken
/// apart leaf by leaf and reassembled along shape_b.
void leaves_of(const ObjC& shape, const Element& e, std::vector<Element>& out) {
  switch (shape.kind()) {
    case ObjC::Kind::Unit: return;
    case ObjC::Kind::Base: out.push_back(e); return;
    default:
      leaves_of(shape.left(), e.first(), out);
      leaves_of(shape.right(), e.second(), out);
  }
}

Element assemble(const ObjC& shape, const std::vector<Element>& leaves, std::size_t& i) {
  switch (shape.kind()) {
    case ObjC::Kind::Unit: return Element::unit();
    case ObjC::Kind::Base: return leaves[i++];
    default: {
      Element l = assemble(shape.left(), leaves, i);
      Element r = assemble(shape.right(), leaves, i);
      return Element::pair(l, r);
    }
  }
}

Outcome c9_nat_iso_synthesis() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  FinModel model(sig, ModelConfig{5, 2, {}});
  Rng rng(909);
  std::size_t pairs = 0;
  for (std::size_t w = 1; w <= 3; ++w) {
    std::vector<ObjC> pool = trees(w, 0);
    for (ObjC& t : trees(w, 1)) pool.push_back(std::move(t));
    for (const ObjC& sa : pool) {
      for (const ObjC& sb : pool) {
        ++pairs;
        std::vector<ObjC> fill;
        for (std::size_t k = 0; k < w; ++k) fill.push_back(random_obj(sig, 1, rng));
        MorC m = canonical_nat_iso(sa, sb, fill);
        if (!is_structural(m)) return {false, "not structural: " + to_string(m)};
        TypeC t = typecheck_c(m, sig);
        if (!(t.dom == substitute(sa, fill)) || !(t.cod == substitute(sb, fill))) {
          return {false, "wrong endpoints for " + to_string(sa) + " -> " + to_string(sb)};
        }
        for (const Element& e : model.carrier(t.dom)) {
          std::vector<Element> leaves;
          leaves_of(sa, e, leaves);
          std::size_t i = 0;
          Element want = assemble(sb, leaves, i);
          if (!(model.apply(m, e) == want)) {
            return {false, "rebracketing differs on " + to_string(e) + " for " + to_string(m)};
          }
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " shape pairs agree with the rebracketing bijection"};
}

Outcome c10_fg_singletons() {
  Signature sig;
  sig.add_object("V");
  sig.add_object("W");
  Rng rng(1010);
  for (int n = 0; n < 200; ++n) {
    ObjC a = random_obj(sig, 3, rng);
    while (objsize(a) > 4) a = random_obj(sig, 3, rng);
    std::vector<ObjC> leaves;
    for (const std::string& s : flatten(a)) leaves.push_back(ObjC::base(s));
    // The right-nested bracketing of the same leaves, sometimes with a unit.
    ObjC b = leaves.empty() ? I : leaves.back();
    for (std::size_t k = leaves.size() - 1; !leaves.empty() && k-- > 0;) b = leaves[k] * b;
    if (pick(rng, 2)) b = pick(rng, 2) ? b * I : I * b;
    MorD f = random_adapter_composite(a, b, 3, rng);
    if (!fg_singleton_check(f, sig)) return {false, "F(G f) != f for " + to_string(f)};
  }
  return {true, "200 singleton-endpoint adapter terms"};
}

Outcome c11_seq_normal_form() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  ObjC x = ObjC::base("X"), y = ObjC::base("Y");
  sig.add_generator("u", x, y);
  sig.add_generator("v", y * x, x);
  sig.add_generator("z", I, x);
  FinModel model(sig, ModelConfig{13, 2, {}});
  Rng rng(1111);
  for (int n = 0; n < 500; ++n) {
    ObjD dom = random_objd(sig, 2, 1, rng);
    MorD t = random_mor_d_from(sig, dom, 4, false, rng);
    SeqNF nf = seq_normal_form(t, sig);
    for (const Slice& s : nf.slices) {
      if (!s.gen.is_primitive()) return {false, "slice carries a non-primitive: " + to_string(s.gen)};
    }
    if (!same_tables(eval_mor_d(recompose(nf), model), eval_mor_d(t, model))) {
      return {false, "recomposition differs for " + to_string(t)};
    }
  }
  return {true, "500 terms, one primitive per slice, recomposition table-equal"};
}

#ifndef STRICTIFY_CLI_PATH
#define STRICTIFY_CLI_PATH ""
#endif

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(STRICTIFY_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  pclose(p);
  return out;
}

Outcome c12_cli_round_trip() {
  Signature sig = four_generator_signature();
  Rng rng(1212);
  for (int n = 0; n < 1000; ++n) {
    MorC f = random_mor(sig, 5, rng);
    std::string text = to_string(f);
    if (!(parse_mor_c(text) == f)) return {false, "C-term does not round-trip: " + text};
    TypeC t = typecheck_c(f, sig);
    if (!(parse_obj(to_string(t.dom)) == t.dom)) return {false, "object does not round-trip: " + to_string(t.dom)};
    ObjD dom = random_objd(sig, 3, 2, rng);
    MorD d = random_mor_d_from(sig, dom, 4, false, rng);
    std::string dtext = to_string(d);
    if (!(parse_mor_d(dtext) == d)) return {false, "D-term does not round-trip: " + dtext};
    if (!(parse_objd(to_string(dom)) == dom)) return {false, "D-object does not round-trip: " + to_string(dom)};
    if (n % 10 == 0) {
      auto j = nlohmann::json::parse(to_json(cmd_strictify(sig, text, false)));
      std::string out = j["output"].get<std::string>();
      if (!(parse_mor_d(out) == strictify_shallow(f, sig))) return {false, "JSON output does not re-parse for " + text};
      auto k = nlohmann::json::parse(to_json(cmd_nonstrictify(sig, out)));
      if (!(parse_mor_c(k["output"].get<std::string>()) == f)) {
        return {false, "JSON nonstrictify output does not re-parse for " + text};
      }
    }
  }
  std::string path = STRICTIFY_CLI_PATH;
  if (!path.empty()) {
    for (const char* args : {"--json canonical '[W|I|W]' '(W * (I * W))'",
                             "--json nonstrictify 'idD[W] (*) pack[I,W] ; pack[W,(I * W)]'",
                             "--json strictify --mode expand 'alpha[W,W,W]'"}) {
      std::string out = run_cli(args);
      auto j = nlohmann::json::parse(out, nullptr, false);
      if (j.is_discarded() || !j.contains("output")) return {false, "executable JSON unreadable for " + std::string(args)};
      std::string o = j["output"].get<std::string>();
      try {
        if (j["command"] == "nonstrictify") {
          parse_mor_c(o);
        } else {
          parse_mor_d(o);
        }
      } catch (const Error&) {
        return {false, "executable output does not re-parse: " + o};
      }
    }
  }
  return {true, "1000 terms print and re-parse identically; JSON outputs re-parse"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "G(F f) is f", 5, c1_round_trip_gf},
      {2, "G respects every defining equation of D", 10, c2_equations_respected},
      {3, "F is a monoidal functor", 10, c3_functor_laws},
      {4, "F and G form an equivalence", 15, c4_equivalence},
      {5, "adapter composites are canonical", 30, c5_canonicity},
      {6, "structural coherence", 20, c6_coherence},
      {7, "canonical arrow of W*(I*W) -> (W*I)*W", 1, c7_worked_example},
      {8, "bundler-unbundler cancellation in b_A", 1, c8_bundler_cancellation},
      {9, "canonical natural isomorphism synthesis", 20, c9_nat_iso_synthesis},
      {10, "F(G f) = f on singleton wires", 10, c10_fg_singletons},
      {11, "sequential normal form", 10, c11_seq_normal_form},
      {12, "text and JSON round trip", 5, c12_cli_round_trip},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error (") + std::string(to_string(e.code())) + "): " + e.what()};
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    if (!o.ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << secs << "s / "
         << c.limit_seconds << "s] " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
