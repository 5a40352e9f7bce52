#pragma once

// The functors between the non-strict category C and its strictification D:
// F (strictify) and G (nonstrictify), the coherence isomorphisms of G, and the
// units of the equivalence.

#include <string>
#include <vector>

#include "strictify/strict.hpp"
#include "strictify/terms.hpp"

namespace strictify {

/// F on objects: A -> [A].
ObjD strictify_obj(const ObjC& a);
/// G on objects: [] -> I, [A] -> A, [A]•R -> A * G(R).
ObjC nonstrictify_obj(const ObjD& x);

/// F(f) = lift(f).
MorD strictify_shallow(const MorC& f, const Signature& sig);

/// F(f) with every associator, unitor and tensor replaced by adapters, so the
/// only remaining lifts wrap generators.
MorD strictify_expand(const MorC& f, const Signature& sig);

/// G on a single slice, following the case table on (left, gen, right).
MorC nonstrictify_slice(const Slice& s);

/// G(t): factor into slices, map each slice, compose. A single slice maps to
/// its image unchanged, so G(lift f) is f itself. Slices whose image is an
/// identity are dropped from longer chains.
MorC nonstrictify(const MorD& t, const Signature& sig);

/// Psi_{X,Y} : G(X) * G(Y) -> G(X•Y).
MorC psi_big(const ObjD& x, const ObjD& y);
/// psi : I -> G([]) = I.
MorC psi_small();

/// epsilon_X : F(G(X)) -> X.
MorD epsilon(const ObjD& x);
/// eta_A : A -> G(F(A)) = A.
MorC eta(const ObjC& a);

enum class FunctorDirection { StrictifyShallow, StrictifyExpand, Nonstrictify };

std::string_view to_string(FunctorDirection d);

/// Diagnostic record of one functor application.
struct FunctorReport {
  std::string input;
  std::string output;
  FunctorDirection direction;
  std::vector<RewriteStep> steps;
};

FunctorReport report_strictify(const MorC& f, bool expand, const Signature& sig);
FunctorReport report_nonstrictify(const MorD& t, const Signature& sig);

}  // namespace strictify
