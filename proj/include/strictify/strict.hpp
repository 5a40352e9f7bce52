#pragma once

// The strictified category D over a signature. Objects are sequences of wires,
// each labelled by a C-object; tensor is concatenation. Morphisms are lifted
// C-morphisms, the adapters (pack / unpack a pair of wires, introduce /
// eliminate a unit wire), identities, composition and tensor.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strictify/terms.hpp"

namespace strictify {

/// A sequence of wire labels. The empty sequence is the strict unit; it is
/// distinct from the one-wire sequence [I].
struct ObjD {
  std::vector<ObjC> wires;

  ObjD() = default;
  ObjD(std::initializer_list<ObjC> ws) : wires(ws) {}
  explicit ObjD(std::vector<ObjC> ws) : wires(std::move(ws)) {}

  std::size_t size() const { return wires.size(); }
  bool empty() const { return wires.empty(); }

  friend bool operator==(const ObjD&, const ObjD&) = default;
};

ObjD operator+(const ObjD& a, const ObjD& b);

/// Flattened base names of all wire labels, in order.
std::vector<std::string> flatten(const ObjD& x);

class MorD {
 public:
  enum class Kind : std::uint8_t { Id, Lift, Pack, Unpack, UnitIntro, UnitElim, Comp, Tensor };

  static MorD id(ObjD x);
  static MorD lift(MorC f);
  static MorD pack(ObjC a, ObjC b);    // [A, B] -> [A*B]
  static MorD unpack(ObjC a, ObjC b);  // [A*B] -> [A, B]
  static MorD unit_intro();            // [] -> [I]
  static MorD unit_elim();             // [I] -> []
  static MorD comp(MorD f, MorD g);    // f first, then g
  static MorD tensor(MorD f, MorD g);

  Kind kind() const;
  const ObjD& wires() const;    // Id
  const MorC& lifted() const;   // Lift
  const ObjC& left() const;     // Pack / Unpack
  const ObjC& right() const;    // Pack / Unpack
  const MorD& first() const;    // Comp / Tensor
  const MorD& second() const;   // Comp / Tensor

  bool is_adapter() const;
  /// Lift or adapter: the terms a slice may carry.
  bool is_primitive() const;

  friend bool operator==(const MorD& a, const MorD& b);

 private:
  struct Node;
  explicit MorD(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeD {
  ObjD dom;
  ObjD cod;
  friend bool operator==(const TypeD&, const TypeD&) = default;
};

TypeD typecheck_d(const MorD& t, const Signature& sig);

/// Number of Pack / Unpack / UnitIntro / UnitElim nodes.
std::size_t count_adapters(const MorD& t);
/// Number of Lift nodes.
std::size_t count_lifts(const MorD& t);

/// id_left • gen • id_right with gen a single primitive. The generator's own
/// interface is cached so slices can be shuffled without a signature.
struct Slice {
  ObjD left;
  MorD gen;
  ObjD right;
  ObjD gen_dom;
  ObjD gen_cod;

  ObjD dom() const { return left + gen_dom + right; }
  ObjD cod() const { return left + gen_cod + right; }
  MorD to_term() const;

  friend bool operator==(const Slice& a, const Slice& b) {
    return a.left == b.left && a.gen == b.gen && a.right == b.right;
  }
};

Slice make_slice(ObjD left, MorD gen, ObjD right, const Signature& sig);

/// Sequential normal form: a chain of slices starting at `dom`.
struct SeqNF {
  ObjD dom;
  std::vector<Slice> slices;

  ObjD cod() const { return slices.empty() ? dom : slices.back().cod(); }
};

/// Factors t into slices using only functoriality of • and interchange:
/// identities vanish, composites concatenate, and t•u becomes (t•id);(id•u).
SeqNF seq_normal_form(const MorD& t, const Signature& sig);

/// Rebuilds a term from slices, left-nested; the empty chain is IdD(dom).
MorD recompose(const SeqNF& nf);

enum class RuleSet { Functoriality, AdapterCancel, NaturalitySlide, StructuralExpand };

/// One rewriting step trace entry.
struct RewriteStep {
  std::string rule;
  std::string detail;
};

struct RewriteOptions {
  /// Upper bound on rewrite steps; 0 means unbounded. Exceeding it throws
  /// BudgetExceeded.
  std::size_t max_steps = 0;
  std::vector<RewriteStep>* trace = nullptr;
};

/// Adapter composite equal to lift(f) when f's head is an associator, unitor
/// (or inverse) or a tensor; nullopt for identities, generators and composites.
/// Sub-terms of a tensor stay lifted.
std::optional<MorD> expand_lift_head(const MorC& f, const Signature& sig);

/// Applies one rule set exhaustively (NaturalitySlide: a bounded sweep).
/// The result has the same type as t.
MorD apply_rules(const MorD& t, RuleSet rules, const Signature& sig, const RewriteOptions& opts = {});

struct NormalizeStats {
  std::size_t cancelled_pairs = 0;
  std::size_t unit_slides = 0;
  std::size_t commutations = 0;
  std::size_t expansions = 0;
  std::size_t steps = 0;
};

/// Expands lifted structure into adapters, factors into slices, then cancels
/// inverse adapter pairs (transporting them across independent slices) and
/// puts the survivors in a canonical order. On adapter-only terms over a
/// one-object signature the result depends only on the endpoints.
MorD normalize_adapters(const MorD& t, const Signature& sig, const RewriteOptions& opts = {},
                        NormalizeStats* stats = nullptr);

/// Same as normalize_adapters but returns the slice chain.
SeqNF normalize_slices(const MorD& t, const Signature& sig, const RewriteOptions& opts = {},
                       NormalizeStats* stats = nullptr);

/// Inverse of a term whose lifts are all structural.
MorD invert_d(const MorD& t);

/// Adapter generators plus the identity-only boundary cases.
bool is_adapter_only(const MorD& t);

// Random generators for property tests.

ObjD random_objd(const Signature& sig, std::size_t max_wires, int depth_bound, Rng& rng);
/// Random well-typed term from `dom` of depth at most depth_bound. Lifts carry
/// random C-terms unless `adapters_only`.
MorD random_mor_d_from(const Signature& sig, const ObjD& dom, int depth_bound, bool adapters_only,
                       Rng& rng);

}  // namespace strictify
