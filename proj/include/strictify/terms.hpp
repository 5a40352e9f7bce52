#pragma once

// Object and morphism terms of the free (non-strict) monoidal category over a
// signature.
//
// Conventions used throughout the library:
//   alpha[A,B,C] : A*(B*C) -> (A*B)*C
//   lambda[A]    : I*A -> A
//   rho[A]       : A*I -> A
// and composition is diagrammatic: comp(f, g) runs f first, then g.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strictify/error.hpp"

namespace strictify {

/// Binary-tree object expression: unit, a named base object, or a tensor.
/// Immutable; copies share structure.
class ObjC {
 public:
  enum class Kind : std::uint8_t { Unit, Base, Tensor };

  ObjC();  // the unit object I

  static ObjC unit() { return ObjC(); }
  static ObjC base(std::string name);
  static ObjC tensor(ObjC left, ObjC right);

  Kind kind() const;
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_base() const { return kind() == Kind::Base; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  const std::string& name() const;  // Base only
  const ObjC& left() const;         // Tensor only
  const ObjC& right() const;        // Tensor only

  friend bool operator==(const ObjC& a, const ObjC& b);
  friend bool operator<(const ObjC& a, const ObjC& b);

 private:
  struct Node;
  explicit ObjC(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline ObjC operator*(ObjC a, ObjC b) { return ObjC::tensor(std::move(a), std::move(b)); }

/// Morphism term of the free non-strict monoidal category.
class MorC {
 public:
  enum class Kind : std::uint8_t {
    Id,
    Gen,
    Comp,
    Tensor,
    Assoc,
    AssocInv,
    UnitL,
    UnitLInv,
    UnitR,
    UnitRInv,
  };

  static MorC id(ObjC a);
  static MorC gen(std::string name);
  static MorC comp(MorC f, MorC g);
  static MorC tensor(MorC f, MorC g);
  static MorC assoc(ObjC a, ObjC b, ObjC c);
  static MorC assoc_inv(ObjC a, ObjC b, ObjC c);
  static MorC unit_l(ObjC a);
  static MorC unit_l_inv(ObjC a);
  static MorC unit_r(ObjC a);
  static MorC unit_r_inv(ObjC a);

  Kind kind() const;
  const std::string& name() const;  // Gen only
  /// Object annotations: Id and unitors use obj(0); associators use 0..2.
  const ObjC& obj(std::size_t i) const;
  const MorC& first() const;   // Comp / Tensor
  const MorC& second() const;  // Comp / Tensor

  friend bool operator==(const MorC& a, const MorC& b);

 private:
  struct Node;
  explicit MorC(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GenType {
  ObjC dom;
  ObjC cod;
};

/// Declared base objects and typed generators. Names are unique across both.
class Signature {
 public:
  void add_object(const std::string& name);
  void add_generator(const std::string& name, ObjC dom, ObjC cod);

  bool has_object(const std::string& name) const { return objects_.count(name) != 0; }
  std::optional<GenType> generator(const std::string& name) const;

  const std::set<std::string>& objects() const { return objects_; }
  const std::map<std::string, GenType>& generators() const { return generators_; }

  /// Throws UnknownName if `a` mentions an undeclared base object.
  void check_obj(const ObjC& a) const;

  /// The signature with one base object and no generators.
  static Signature single_object(const std::string& name = "W");

 private:
  std::set<std::string> objects_;
  std::map<std::string, GenType> generators_;
};

struct TypeC {
  ObjC dom;
  ObjC cod;
  friend bool operator==(const TypeC&, const TypeC&) = default;
};

TypeC typecheck_c(const MorC& f, const Signature& sig);

/// Typing of a generator-free term without validating base-object names.
/// Throws UnknownName on generators.
TypeC structural_type(const MorC& f);

/// In-order base leaves; unit leaves contribute nothing.
std::vector<std::string> flatten(const ObjC& a);
std::size_t objsize(const ObjC& a);

/// True iff the term contains no generator.
bool is_structural(const MorC& f);

/// Replaces the i-th base leaf of `shape` (left to right) with fill[i].
ObjC substitute(const ObjC& shape, const std::vector<ObjC>& fill);

/// Replaces base leaves inside the object annotations of a structural term,
/// splitting `fill` across sub-terms by leaf count. This is the action of the
/// unique strict monoidal functor sending the i-th leaf to fill[i].
MorC substitute(const MorC& f, const std::vector<ObjC>& fill);

/// Inverse of a structural term. Throws NotInvertible on generators.
MorC invert_c(const MorC& f);

/// Counts occurrences of each constructor kind (index = static_cast<int>(Kind)).
std::array<std::size_t, 10> count_kinds(const MorC& f);

// Random term generators for property tests. All are deterministic in the rng.
using Rng = std::mt19937_64;

ObjC random_obj(const Signature& sig, int depth_bound, Rng& rng);
/// A well-typed term of depth at most `depth_bound`, starting at `dom`.
MorC random_mor_from(const Signature& sig, const ObjC& dom, int depth_bound, Rng& rng);
/// A well-typed term whose domain is drawn from generator domains or
/// random objects.
MorC random_mor(const Signature& sig, int depth_bound, Rng& rng);
/// Structural term starting at `dom`, built from `steps` random rebracketings.
MorC random_structural_walk(const ObjC& dom, int steps, Rng& rng);

}  // namespace strictify
