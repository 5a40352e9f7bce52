#pragma once

// Packing and unpacking, canonical adapter arrows, and equality decisions that
// rest on coherence.

#include <string>
#include <vector>

#include "strictify/finset.hpp"
#include "strictify/strict.hpp"
#include "strictify/terms.hpp"

namespace strictify {

/// The wire sequence of base objects underlying X (units dropped).
ObjD flat_wires(const ObjD& x);

/// pack(X) : flat_wires(X) -> X, built from adapters and identities.
MorD pack_obj(const ObjD& x);
/// unpack(X) = pack(X)^-1.
MorD unpack_obj(const ObjD& x);

/// unpack(A) ; pack(B) exactly as defined, identity factors omitted. Throws
/// FlatteningMismatch unless A and B have the same flattened base sequence.
MorD canonical_unnormalized(const ObjD& a, const ObjD& b);

/// The canonical arrow A -> B in adapter normal form: the normal form of
/// canonical_unnormalized(A, B). Every adapter-only term A -> B over one base
/// object normalises to exactly this term; canonical_d(X, X) is idD[X] and
/// canonical_d([], [I]) is unit+.
MorD canonical_d(const ObjD& a, const ObjD& b);

struct EqVerdict {
  enum class Kind { Equal, NotEqual, Unknown };
  Kind kind;
  std::string reason;
};

std::string_view to_string(EqVerdict::Kind k);

/// Equal for parallel structural terms (coherence) or terms with identical
/// expanded normal forms; NotEqual when endpoints differ; otherwise Unknown,
/// unless a model is supplied, in which case exhaustive evaluation decides
/// for that model.
EqVerdict equal_structural(const MorC& f, const MorC& g, const Signature& sig,
                           const FinModel* model = nullptr);

/// The canonical map between two bracketing shapes, instantiated at `fill`:
/// a structural term substitute(shape_a, fill) -> substitute(shape_b, fill).
MorC canonical_nat_iso(const ObjC& shape_a, const ObjC& shape_b, const std::vector<ObjC>& fill);

/// For f between single wires whose lifts are all structural, checks that
/// F(G(f)) and f have the same adapter normal form. Throws Precondition
/// otherwise.
bool fg_singleton_check(const MorD& f, const Signature& sig);

}  // namespace strictify
