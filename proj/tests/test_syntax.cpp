#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "strictify/syntax.hpp"

using namespace strictify;
using testing_support::small_signature;

namespace {
const ObjC X = ObjC::base("X");
const ObjC Y = ObjC::base("Y");
const ObjC I;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}
}  // namespace

TEST_CASE("objects print fully parenthesized") {
  CHECK(to_string(X * (I * Y)) == "(X * (I * Y))");
  CHECK(to_string(ObjD{X, I * Y}) == "[X|(I * Y)]");
  CHECK(to_string(ObjD{}) == "[]");
}

TEST_CASE("morphism printing") {
  MorC f = MorC::comp(MorC::assoc(X, I, Y), MorC::tensor(MorC::unit_r(X), MorC::id(Y)));
  CHECK(to_string(f) == "alpha[X,I,Y] ; rho[X] (*) id[Y]");
  CHECK(to_string(MorC::comp(MorC::gen("u"), MorC::comp(MorC::gen("u"), MorC::gen("u")))) == "u ; (u ; u)");
  CHECK(to_string(MorC::unit_l_inv(X)) == "lambda'[X]");
  MorD t = MorD::comp(MorD::tensor(MorD::unit_intro(), MorD::id(ObjD{X})), MorD::pack(I, X));
  CHECK(to_string(t) == "unit+ (*) idD[X] ; pack[I,X]");
  CHECK(to_string(MorD::lift(MorC::gen("u"))) == "lift(u)");
}

TEST_CASE("';' binds looser than '(*)', both associate to the left") {
  MorC f = parse_mor_c("u ; u (*) id[X] ; v");
  CHECK(f == MorC::comp(MorC::comp(MorC::gen("u"), MorC::tensor(MorC::gen("u"), MorC::id(X))), MorC::gen("v")));
  MorC g = parse_mor_c("id[X] (*) id[Y] (*) id[I]");
  CHECK(g == MorC::tensor(MorC::tensor(MorC::id(X), MorC::id(Y)), MorC::id(I)));
}

TEST_CASE("object syntax accepts one bare product") {
  CHECK(parse_obj("X * Y") == X * Y);
  CHECK(parse_obj("(X * Y) * I") == (X * Y) * I);
  CHECK(code_of([] { parse_obj("X * Y * X"); }) == ErrorCode::Parse);
  CHECK(parse_objd("[X|Y * X]") == ObjD{X, Y * X});
  CHECK(parse_objd("X") == ObjD{X});
  CHECK(parse_objd("[]") == ObjD{});
}

TEST_CASE("D-terms parse") {
  CHECK(parse_mor_d("idD[] (*) unit+ ; unpack[X,Y]") ==
        MorD::comp(MorD::tensor(MorD::id(ObjD{}), MorD::unit_intro()), MorD::unpack(X, Y)));
  CHECK(parse_mor_d("lift(alpha'[X,Y,I])") == MorD::lift(MorC::assoc_inv(X, Y, I)));
  CHECK(code_of([] { parse_mor_c("f'"); }) == ErrorCode::Parse);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_mor_c("u ; ; v");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).rfind("1:5:", 0) == 0);
  }
  CHECK(code_of([] { parse_mor_c("alpha[X,Y]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_mor_d("pack[X]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_mor_c("lambda"); }) == ErrorCode::Parse);
}

TEST_CASE("signature files") {
  Signature sig = parse_signature("# objects\nobj X\nobj Y\n\ngen u : X -> Y  # a map\ngen v : Y * X -> X\n");
  CHECK(sig.has_object("X"));
  REQUIRE(sig.generator("v"));
  CHECK(sig.generator("v")->dom == Y * X);
  CHECK(parse_signature(to_string(sig)).generators().size() == 2);
  try {
    parse_signature("obj X\ngen u : X -> Q\n");
    FAIL("expected an unknown-name error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
  try {
    parse_signature("obj X\n\ngen u : X -> (X\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).rfind("3:", 0) == 0);
  }
  CHECK(code_of([] { parse_signature("obj X\nobj X\n"); }) == ErrorCode::DuplicateName);
  CHECK(code_of([] { parse_signature("obj lift\n"); }) == ErrorCode::DuplicateName);
}

TEST_CASE("printing then parsing is the identity on random terms") {
  Signature sig = small_signature();
  Rng rng(5);
  for (int n = 0; n < 300; ++n) {
    MorC f = random_mor(sig, 5, rng);
    CHECK(parse_mor_c(to_string(f)) == f);
    ObjD dom = random_objd(sig, 3, 2, rng);
    MorD t = random_mor_d_from(sig, dom, 4, false, rng);
    CHECK(parse_mor_d(to_string(t)) == t);
  }
}
