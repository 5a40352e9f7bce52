#include "strictify/render.hpp"

#include <algorithm>
#include <sstream>

#include "strictify/syntax.hpp"

namespace strictify {

std::string_view to_string(BoxKind k) {
  switch (k) {
    case BoxKind::Generator: return "generator";
    case BoxKind::Pack: return "pack";
    case BoxKind::Unpack: return "unpack";
    case BoxKind::UnitIntro: return "unit-intro";
    case BoxKind::UnitElim: return "unit-elim";
  }
  return "?";
}

std::array<std::size_t, 5> DiagramLayout::glyph_counts() const {
  std::array<std::size_t, 5> n{};
  for (const Column& c : columns) ++n[static_cast<std::size_t>(c.box.kind)];
  return n;
}

DiagramLayout layout(const MorD& t, const Signature& sig) {
  SeqNF nf = seq_normal_form(t, sig);
  DiagramLayout l{nf.dom, {}};
  for (const Slice& s : nf.slices) {
    Box box{BoxKind::Generator, "", s.left.size(), s.gen_dom.wires, s.gen_cod.wires};
    switch (s.gen.kind()) {
      case MorD::Kind::Lift:
        box.label = to_string(s.gen.lifted());
        break;
      case MorD::Kind::Pack:
        box.kind = BoxKind::Pack;
        box.label = "pack";
        break;
      case MorD::Kind::Unpack:
        box.kind = BoxKind::Unpack;
        box.label = "unpack";
        break;
      case MorD::Kind::UnitIntro:
        box.kind = BoxKind::UnitIntro;
        box.label = "unit+";
        break;
      default:
        box.kind = BoxKind::UnitElim;
        box.label = "unit-";
        break;
    }
    l.columns.push_back({s.dom(), std::move(box), s.cod()});
  }
  return l;
}

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* dot_shape(BoxKind k) {
  switch (k) {
    case BoxKind::Generator: return "box";
    case BoxKind::Pack: return "triangle";
    case BoxKind::Unpack: return "invtriangle";
    case BoxKind::UnitIntro: return "circle";
    case BoxKind::UnitElim: return "doublecircle";
  }
  return "box";
}

}  // namespace

std::string emit_dot(const DiagramLayout& l) {
  std::ostringstream out;
  out << "digraph diagram {\n  rankdir=LR;\n  node [fontname=\"monospace\"];\n";
  std::vector<std::string> ends;
  for (std::size_t j = 0; j < l.dom.size(); ++j) {
    std::string id = "in" + std::to_string(j);
    out << "  " << id << " [shape=point];\n";
    ends.push_back(id);
  }
  auto edge = [&out](const std::string& from, const std::string& to, const ObjC& label) {
    out << "  " << from << " -> " << to << " [label=\"" << escape_dot(to_string(label)) << "\"];\n";
  };
  for (std::size_t i = 0; i < l.columns.size(); ++i) {
    const Column& c = l.columns[i];
    const Box& b = c.box;
    std::string id = "c" + std::to_string(i);
    out << "  " << id << " [shape=" << dot_shape(b.kind) << ", class=\"glyph " << to_string(b.kind)
        << "\", label=\"" << escape_dot(b.label) << "\"];\n";
    for (std::size_t k = 0; k < b.inputs.size(); ++k) edge(ends[b.offset + k], id, b.inputs[k]);
    auto first = ends.begin() + static_cast<std::ptrdiff_t>(b.offset);
    ends.erase(first, first + static_cast<std::ptrdiff_t>(b.inputs.size()));
    ends.insert(ends.begin() + static_cast<std::ptrdiff_t>(b.offset), b.outputs.size(), id);
  }
  ObjD cod = l.cod();
  for (std::size_t j = 0; j < cod.size(); ++j) {
    std::string id = "out" + std::to_string(j);
    out << "  " << id << " [shape=point];\n";
    edge(ends[j], id, cod.wires[j]);
  }
  out << "}\n";
  return out.str();
}

std::string emit_svg(const DiagramLayout& l) {
  constexpr int kStep = 100;
  constexpr int kRow = 40;
  constexpr int kMargin = 80;
  std::size_t rows = l.dom.size();
  for (const Column& c : l.columns) rows = std::max({rows, c.wires_in.size(), c.wires_out.size()});
  rows = std::max<std::size_t>(rows, 1);
  const int width = 2 * kMargin + static_cast<int>(l.columns.size()) * kStep;
  const int height = 40 + static_cast<int>(rows) * kRow;
  auto x_at = [&](std::size_t stage) { return kMargin + static_cast<int>(stage) * kStep; };
  auto y_at = [&](std::size_t row) { return 40 + static_cast<int>(row) * kRow; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<g font-family=\"monospace\" font-size=\"10\" stroke=\"black\" fill=\"none\">\n";
  auto line = [&out](int x1, int y1, int x2, int y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
  };
  auto text = [&out](int x, int y, const std::string& s) {
    out << "<text x=\"" << x << "\" y=\"" << y << "\" stroke=\"none\" fill=\"black\">" << escape_xml(s)
        << "</text>\n";
  };

  for (std::size_t j = 0; j < l.dom.size(); ++j) {
    text(4, y_at(j) - 4, to_string(l.dom.wires[j]));
    line(4, y_at(j), x_at(0), y_at(j));
  }
  for (std::size_t i = 0; i < l.columns.size(); ++i) {
    const Column& c = l.columns[i];
    const Box& b = c.box;
    const int x0 = x_at(i);
    const int x1 = x_at(i + 1);
    const int bl = x0 + 30;
    const int br = x1 - 30;
    const std::size_t nin = b.inputs.size();
    const std::size_t nout = b.outputs.size();
    for (std::size_t j = 0; j < c.wires_in.size(); ++j) {
      if (j < b.offset) {
        line(x0, y_at(j), x1, y_at(j));
      } else if (j >= b.offset + nin) {
        line(x0, y_at(j), x1, y_at(j - nin + nout));
      } else {
        line(x0, y_at(j), bl, y_at(j));
      }
    }
    for (std::size_t k = 0; k < nout; ++k) {
      line(br, y_at(b.offset + k), x1, y_at(b.offset + k));
      text(br + 2, y_at(b.offset + k) - 4, to_string(b.outputs[k]));
    }
    const std::size_t span = std::max<std::size_t>({nin, nout, 1});
    const int top = y_at(b.offset) - 14;
    const int bottom = y_at(b.offset + span - 1) + 14;
    const int mid = (top + bottom) / 2;
    out << "<g class=\"glyph " << to_string(b.kind) << "\">\n";
    switch (b.kind) {
      case BoxKind::Generator:
        out << "<rect x=\"" << bl << "\" y=\"" << top << "\" width=\"" << (br - bl) << "\" height=\""
            << (bottom - top) << "\"/>\n";
        break;
      case BoxKind::Pack:
        out << "<polygon points=\"" << bl << "," << top << " " << br << "," << mid << " " << bl << ","
            << bottom << "\"/>\n";
        break;
      case BoxKind::Unpack:
        out << "<polygon points=\"" << br << "," << top << " " << bl << "," << mid << " " << br << ","
            << bottom << "\"/>\n";
        break;
      case BoxKind::UnitIntro:
      case BoxKind::UnitElim:
        out << "<circle cx=\"" << (bl + br) / 2 << "\" cy=\"" << mid << "\" r=\"6\"/>\n";
        break;
    }
    text(bl, top - 2, b.label);
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace strictify
