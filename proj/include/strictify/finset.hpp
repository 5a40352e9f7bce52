#pragma once

// Finite sets with nested pairing: a genuinely non-strict monoidal category
// used as a brute-force oracle. Pair(Pair(a,b),c) and Pair(a,Pair(b,c)) are
// different elements, so associators act non-trivially.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "strictify/strict.hpp"
#include "strictify/terms.hpp"

namespace strictify {

class Element {
 public:
  enum class Kind : std::uint8_t { Unit, Atom, Pair };

  Element();  // the unit element
  static Element unit() { return Element(); }
  static Element atom(std::uint32_t index);
  static Element pair(Element a, Element b);

  Kind kind() const { return kind_; }
  std::uint32_t index() const { return index_; }  // Atom only
  const Element& first() const;                   // Pair only
  const Element& second() const;                  // Pair only

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator<(const Element& a, const Element& b);

 private:
  Kind kind_ = Kind::Unit;
  std::uint32_t index_ = 0;
  std::shared_ptr<const std::pair<Element, Element>> children_;
};

std::string to_string(const Element& e);

using Tuple = std::vector<Element>;

/// Carrier sizes and the seed for generator tables.
struct ModelConfig {
  std::uint64_t seed = 0;
  std::uint32_t default_size = 2;
  std::map<std::string, std::uint32_t> sizes;
};

/// `key=value` lines: seed=<n>, default_size=<n>, size.<Object>=<n>; `#`
/// comments and blank lines are ignored.
ModelConfig parse_model_config(std::string_view text);

class FinModel {
 public:
  /// Draws a uniformly random table for every generator of `sig`.
  FinModel(const Signature& sig, ModelConfig config = {});

  const Signature& signature() const { return sig_; }
  const ModelConfig& config() const { return config_; }
  std::uint32_t size_of(const std::string& base) const;

  /// Enumerated carrier, left components varying slowest.
  const std::vector<Element>& carrier(const ObjC& a) const;
  std::vector<Tuple> carrier(const ObjD& x) const;

  Element apply(const MorC& f, const Element& x) const;
  Tuple apply(const MorD& t, const Tuple& x) const;

  const std::map<Element, Element>& generator_table(const std::string& name) const;

 private:
  Signature sig_;
  ModelConfig config_;
  std::map<std::string, std::map<Element, Element>> gens_;
  mutable std::map<ObjC, std::vector<Element>> carriers_;
};

/// A morphism's graph over its full domain. C-morphisms have one-wire
/// domains, so a C-table on A and a D-table on [A] share a domain.
struct Table {
  std::vector<ObjC> dom;
  std::vector<ObjC> cod;
  std::vector<Tuple> inputs;
  std::vector<Tuple> outputs;
};

std::vector<Element> eval_obj(const ObjC& a, const FinModel& m);
Table eval_mor(const MorC& f, const FinModel& m);
Table eval_mor_d(const MorD& t, const FinModel& m);

/// Pointwise equality; throws DomainMismatch when the domains differ.
bool extensional_equal(const Table& x, const Table& y);

}  // namespace strictify
