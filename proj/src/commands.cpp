#include "strictify/commands.hpp"

#include <json.hpp>

#include "strictify/functors.hpp"
#include "strictify/render.hpp"
#include "strictify/syntax.hpp"

namespace strictify {

using nlohmann::json;

namespace {

json trace_json(const std::vector<RewriteStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"rule", s.rule}, {"detail", s.detail}});
  return out;
}

void check_objd(const ObjD& x, const Signature& sig) {
  for (const ObjC& w : x.wires) sig.check_obj(w);
}

std::string type_text(const ObjC& a, const ObjC& b) { return to_string(a) + " -> " + to_string(b); }
std::string type_text(const ObjD& a, const ObjD& b) { return to_string(a) + " -> " + to_string(b); }

}  // namespace

std::string to_json(const CommandResult& r) {
  json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["output"] = r.output;
  if (!r.trace.empty()) j["trace"] = trace_json(r.trace);
  if (r.verdict) {
    j["verdict"] = std::string(to_string(r.verdict->kind));
    j["reason"] = r.verdict->reason;
  }
  if (r.document) j["document"] = *r.document;
  return j.dump();
}

std::string error_json(const std::string& command, const std::vector<std::string>& input, const Error& e) {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  return j.dump();
}

std::string to_text(const CommandResult& r) {
  std::string out;
  for (const auto& s : r.trace) out += "  [" + s.rule + "] " + s.detail + "\n";
  if (r.verdict) out += std::string(to_string(r.verdict->kind)) + ": " + r.verdict->reason + "\n";
  if (!r.output.empty()) out += r.output + "\n";
  if (r.document) out += *r.document;
  return out;
}

CommandResult cmd_typecheck(const Signature& sig, const std::string& term) {
  CommandResult r{"typecheck", {term}, "", {}, std::nullopt, std::nullopt};
  std::optional<MorC> c;
  try {
    c = parse_mor_c(term);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
  }
  if (c) {
    TypeC t = typecheck_c(*c, sig);
    r.output = type_text(t.dom, t.cod);
    r.trace.push_back({"category", "C"});
  } else {
    TypeD t = typecheck_d(parse_mor_d(term), sig);
    r.output = type_text(t.dom, t.cod);
    r.trace.push_back({"category", "D"});
  }
  return r;
}

CommandResult cmd_strictify(const Signature& sig, const std::string& term, bool expand) {
  CommandResult r{"strictify", {term}, "", {}, std::nullopt, std::nullopt};
  FunctorReport rep = report_strictify(parse_mor_c(term), expand, sig);
  r.output = rep.output;
  r.trace = rep.steps;
  return r;
}

CommandResult cmd_nonstrictify(const Signature& sig, const std::string& dterm) {
  CommandResult r{"nonstrictify", {dterm}, "", {}, std::nullopt, std::nullopt};
  FunctorReport rep = report_nonstrictify(parse_mor_d(dterm), sig);
  r.output = rep.output;
  r.trace = rep.steps;
  return r;
}

CommandResult cmd_normalize(const Signature& sig, const std::string& dterm, std::size_t max_steps) {
  CommandResult r{"normalize", {dterm}, "", {}, std::nullopt, std::nullopt};
  RewriteOptions opts;
  opts.max_steps = max_steps;
  opts.trace = &r.trace;
  NormalizeStats stats;
  MorD out = normalize_adapters(parse_mor_d(dterm), sig, opts, &stats);
  r.output = to_string(out);
  r.trace.push_back({"summary", std::to_string(stats.cancelled_pairs) + " cancelled pairs, " +
                                    std::to_string(count_adapters(out)) + " adapters remain"});
  return r;
}

CommandResult cmd_canonical(const Signature& sig, const std::string& a, const std::string& b) {
  CommandResult r{"canonical", {a, b}, "", {}, std::nullopt, std::nullopt};
  ObjD x = parse_objd(a);
  ObjD y = parse_objd(b);
  check_objd(x, sig);
  check_objd(y, sig);
  r.output = to_string(canonical_d(x, y));
  return r;
}

CommandResult cmd_equal(const Signature& sig, const std::string& f, const std::string& g,
                        const std::optional<ModelConfig>& model) {
  CommandResult r{"equal", {f, g}, "", {}, std::nullopt, std::nullopt};
  std::optional<FinModel> m;
  if (model) m.emplace(sig, *model);
  EqVerdict v = equal_structural(parse_mor_c(f), parse_mor_c(g), sig, m ? &*m : nullptr);
  r.output = std::string(to_string(v.kind));
  r.verdict = v;
  return r;
}

CommandResult cmd_render(const Signature& sig, const std::string& dterm, RenderFormat format) {
  CommandResult r{"render", {dterm}, "", {}, std::nullopt, std::nullopt};
  DiagramLayout l = layout(parse_mor_d(dterm), sig);
  r.output = format == RenderFormat::Dot ? emit_dot(l) : emit_svg(l);
  auto n = l.glyph_counts();
  std::string tally;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k) tally += ", ";
    tally += std::string(to_string(static_cast<BoxKind>(k))) + "=" + std::to_string(n[k]);
  }
  r.trace.push_back({"glyphs", tally});
  return r;
}

Signature parity_signature() {
  Signature sig;
  sig.add_object("B");
  ObjC b = ObjC::base("B");
  sig.add_generator("xor", b * b, b);
  sig.add_generator("zero", ObjC::unit(), b);
  return sig;
}

ObjC parity_wire(std::size_t n) {
  ObjC b = ObjC::base("B");
  if (n <= 1) return b;
  return b * parity_wire(n - 1);
}

MorD parity_circuit(std::size_t n) {
  ObjC b = ObjC::base("B");
  MorD zero = MorD::lift(MorC::gen("zero"));
  if (n == 0) return zero;
  MorD combine = MorD::comp(MorD::pack(b, b), MorD::lift(MorC::gen("xor")));
  if (n == 1) {
    MorD constant = MorD::comp(MorD::unit_intro(), zero);
    return MorD::comp(MorD::tensor(MorD::id(ObjD{b}), constant), combine);
  }
  MorD split = MorD::unpack(b, parity_wire(n - 1));
  MorD body = MorD::tensor(MorD::id(ObjD{b}), parity_circuit(n - 1));
  return MorD::comp(MorD::comp(split, body), combine);
}

CommandResult cmd_demo(const std::string& name, std::size_t n, RenderFormat format) {
  if (name != "parity") throw Error(ErrorCode::UnknownName, "unknown demo '" + name + "' (available: parity)");
  CommandResult r{"demo", {name, std::to_string(n)}, "", {}, std::nullopt, std::nullopt};
  Signature sig = parity_signature();
  MorD circuit = parity_circuit(n);
  TypeD t = typecheck_d(circuit, sig);
  r.output = to_string(circuit);
  r.trace.push_back({"signature", to_string(sig)});
  r.trace.push_back({"type", type_text(t.dom, t.cod)});
  DiagramLayout l = layout(circuit, sig);
  r.document = format == RenderFormat::Dot ? emit_dot(l) : emit_svg(l);
  return r;
}

}  // namespace strictify
