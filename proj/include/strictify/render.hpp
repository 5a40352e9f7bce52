#pragma once

// String-diagram emission: one column per slice, read left to right.

#include <array>
#include <string>
#include <vector>

#include "strictify/strict.hpp"

namespace strictify {

enum class BoxKind { Generator, Pack, Unpack, UnitIntro, UnitElim };

std::string_view to_string(BoxKind k);

struct Box {
  BoxKind kind;
  std::string label;
  std::size_t offset;  // index of the first input wire
  std::vector<ObjC> inputs;
  std::vector<ObjC> outputs;
};

struct Column {
  ObjD wires_in;
  Box box;
  ObjD wires_out;
};

struct DiagramLayout {
  ObjD dom;
  std::vector<Column> columns;

  ObjD cod() const { return columns.empty() ? dom : columns.back().wires_out; }
  /// Glyph tally indexed by BoxKind.
  std::array<std::size_t, 5> glyph_counts() const;
};

DiagramLayout layout(const MorD& t, const Signature& sig);

std::string emit_dot(const DiagramLayout& l);
std::string emit_svg(const DiagramLayout& l);

}  // namespace strictify
