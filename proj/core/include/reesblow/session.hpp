#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "reesblow/blowup.hpp"
#include "reesblow/errors.hpp"

namespace reesblow {

/// A failed script command; line numbers are 1-based.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

struct SessionOptions {
  /// Field of rings declared without one.
  Field field = Field::rationals();
  /// Order of rings declared without one, and of `gb` without an argument.
  MonomialOrder order = MonomialOrder::grevlex();
  /// Overrides every per-command default bound.
  std::optional<int> bound;
};

struct OutputRecord {
  std::size_t line = 0;
  std::string command;
  /// Canonical text payload, one or more lines without a trailing newline.
  std::string text;
  /// Structured payload: {kind, name, generators, weights, reports, ...}.
  nlohmann::ordered_json result;
  double seconds = 0;
  std::string status = "ok";
};

enum class OutputMode { Text, Json };

/// One command of a script with its source line.
struct ScriptCommand {
  std::size_t line = 0;
  std::string text;
};

/// Splits a script on newlines and on ';' outside brackets, quotes and
/// parentheses; drops '#' comments and blank commands.
std::vector<ScriptCommand> split_script(std::string_view script);

/// Line-oriented interpreter over named, immutable bindings.
class Session {
 public:
  explicit Session(SessionOptions options = {});

  /// Executes one command. Library errors propagate unchanged.
  OutputRecord execute(std::string_view command, std::size_t line = 0);
  /// Executes every command of a script in order; the first failure is
  /// rethrown as ScriptError. Records produced before it remain in
  /// records().
  std::vector<OutputRecord> run(std::string_view script);

  const std::vector<ScriptCommand>& log() const noexcept { return log_; }
  const std::vector<OutputRecord>& records() const noexcept { return records_; }
  const SessionOptions& options() const noexcept { return options_; }

  /// Runs a command log in a fresh session.
  static std::vector<OutputRecord> replay(const std::vector<ScriptCommand>& log, const SessionOptions& options);

  struct IdealBinding {
    /// Generators as declared or computed.
    Ideal ideal;
    /// The ideal together with the relations of its algebra.
    Ideal full;
    std::string algebra;
  };
  using Binding = std::variant<GradedAlgebra, IdealBinding, ReesPresentation, ProjAtlas>;

  const Binding* find(const std::string& name) const;

 private:
  class Command;

  void bind(const std::string& name, Binding value, std::size_t line);

  SessionOptions options_;
  std::map<std::string, Binding> bindings_;
  std::vector<ScriptCommand> log_;
  std::vector<OutputRecord> records_;
};

std::string format_output(const OutputRecord& record, OutputMode mode, bool timing = false);
/// Text: records separated by newlines, each headed by "> command".
/// Json: {"schema":"rees-blowup/1","records":[...]}.
std::string format_document(const std::vector<OutputRecord>& records, OutputMode mode, bool timing = false);

inline constexpr const char* kJsonSchema = "rees-blowup/1";

}  // namespace reesblow
