#pragma once

// Concrete syntax: printers and parsers for objects, morphisms and signature
// files.
//
//   objects     I | name | (A * B)          a single top-level `A * B` is accepted
//   C-terms     id[A] | gen | alpha[A,B,C] | alpha'[A,B,C] | lambda[A] | lambda'[A]
//               | rho[A] | rho'[A] | f ; g | f (*) g | (f)
//   D-terms     lift(f) | pack[A,B] | unpack[A,B] | unit+ | unit- | idD[A|B|...]
//               | t ; u | t (*) u | (t)
//   D-objects   [A|B|...] | [] | A   (a bare object is one wire)
//
// `;` is diagrammatic composition (left operand first) and binds looser than
// `(*)`. Both are left-associative. Printing then parsing returns the same AST.

#include <string>
#include <string_view>

#include "strictify/strict.hpp"
#include "strictify/terms.hpp"

namespace strictify {

std::string to_string(const ObjC& a);
std::string to_string(const MorC& f);
std::string to_string(const ObjD& x);
std::string to_string(const MorD& t);

// Parsers throw Error(Parse) with a "line:column" prefix. Names are not
// checked against a signature here; typecheck afterwards.
ObjC parse_obj(std::string_view text);
ObjD parse_objd(std::string_view text);
MorC parse_mor_c(std::string_view text);
MorD parse_mor_d(std::string_view text);

/// Lines `obj <name>` and `gen <name> : <obj> -> <obj>`; `#` starts a
/// comment. Duplicate or reserved names are rejected.
Signature parse_signature(std::string_view text);

/// Renders a signature in the file format accepted by parse_signature.
std::string to_string(const Signature& sig);

}  // namespace strictify
