#pragma once

#include <string>

#include "strictify/finset.hpp"
#include "strictify/strict.hpp"
#include "strictify/syntax.hpp"

namespace testing_support {

using namespace strictify;

inline ObjC W() { return ObjC::base("W"); }

inline bool same_tables(const Table& a, const Table& b) {
  return a.dom == b.dom && a.cod == b.cod && extensional_equal(a, b);
}

/// X, Y and generators u : X -> Y, v : Y * X -> X, z : I -> X.
inline Signature small_signature() {
  Signature sig;
  sig.add_object("X");
  sig.add_object("Y");
  ObjC x = ObjC::base("X"), y = ObjC::base("Y");
  sig.add_generator("u", x, y);
  sig.add_generator("v", y * x, x);
  sig.add_generator("z", ObjC::unit(), x);
  return sig;
}

}  // namespace testing_support
