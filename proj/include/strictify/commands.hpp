#pragma once

// The command layer behind the `strictify` executable. Each command is a
// deterministic function from its textual inputs to a CommandResult, so it
// can be exercised without a process boundary.

#include <optional>
#include <string>
#include <vector>

#include "strictify/coherence.hpp"
#include "strictify/finset.hpp"
#include "strictify/strict.hpp"

namespace strictify {

struct CommandResult {
  std::string command;
  std::vector<std::string> input;
  std::string output;
  std::vector<RewriteStep> trace;
  std::optional<EqVerdict> verdict;
  /// A rendered diagram accompanying the output (render, demo).
  std::optional<std::string> document;
};

/// {command, input, output, trace?, verdict?, document?} as one line of JSON.
std::string to_json(const CommandResult& r);
/// Structured error document for the `--json` mode.
std::string error_json(const std::string& command, const std::vector<std::string>& input, const Error& e);
/// Plain-text rendering for the default mode.
std::string to_text(const CommandResult& r);

/// A term is read as a C-term when it parses as one, otherwise as a D-term.
CommandResult cmd_typecheck(const Signature& sig, const std::string& term);
CommandResult cmd_strictify(const Signature& sig, const std::string& term, bool expand);
CommandResult cmd_nonstrictify(const Signature& sig, const std::string& dterm);
CommandResult cmd_normalize(const Signature& sig, const std::string& dterm, std::size_t max_steps = 0);
CommandResult cmd_canonical(const Signature& sig, const std::string& a, const std::string& b);
CommandResult cmd_equal(const Signature& sig, const std::string& f, const std::string& g,
                        const std::optional<ModelConfig>& model = std::nullopt);

enum class RenderFormat { Dot, Svg };
CommandResult cmd_render(const Signature& sig, const std::string& dterm, RenderFormat format);
CommandResult cmd_demo(const std::string& name, std::size_t n, RenderFormat format = RenderFormat::Dot);

// The parity circuit: one object B, xor : B * B -> B and zero : I -> B.

Signature parity_signature();
/// B^1 = B, B^n = B * B^(n-1).
ObjC parity_wire(std::size_t n);
/// parity_0 : [I] -> [B]; parity_n : [B^n] -> [B], splitting off one wire
/// per level with an unpack.
MorD parity_circuit(std::size_t n);

}  // namespace strictify
