#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reesblow/session.hpp"

namespace {

constexpr int kScriptError = 2;
constexpr int kIoError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded algebra, Rees algebra and blow-up scripts", "reesblow"};
  std::string path;
  bool json = false;
  bool timing = false;
  std::string field = "QQ";
  std::string order = "grevlex";
  int bound = 0;
  app.add_option("script", path, "Script file; reads standard input when omitted or '-'");
  app.add_flag("--json", json, "Emit structured records");
  app.add_option("--field", field, "Default coefficient field: QQ or Fp:<p>");
  auto* bound_opt = app.add_option("--bound", bound, "Override every per-command search bound")
                        ->check(CLI::NonNegativeNumber);
  app.add_option("--order", order, "Default monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_flag("--timing", timing, "Report wall time per command");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kScriptError;
  }

  reesblow::SessionOptions options;
  try {
    options.field = reesblow::Field::parse(field);
  } catch (const std::exception& e) {
    std::cerr << "error: --field: " << e.what() << "\n";
    return kScriptError;
  }
  options.order = order == "lex" ? reesblow::MonomialOrder::lex() : reesblow::MonomialOrder::grevlex();
  if (*bound_opt) options.bound = bound;

  std::string script;
  if (path.empty() || path == "-") {
    script.assign(std::istreambuf_iterator<char>(std::cin), {});
    if (std::cin.bad()) {
      std::cerr << "error: cannot read standard input\n";
      return kIoError;
    }
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return kIoError;
    }
    script.assign(std::istreambuf_iterator<char>(in), {});
  }

  auto mode = json ? reesblow::OutputMode::Json : reesblow::OutputMode::Text;
  reesblow::Session session(options);
  int status = 0;
  std::vector<reesblow::OutputRecord> records;
  try {
    session.run(script);
    records = session.records();
  } catch (const reesblow::ScriptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kScriptError;
    records = session.records();
    if (json) {
      reesblow::OutputRecord failed;
      failed.line = e.line();
      try {
        auto commands = reesblow::split_script(script);
        if (records.size() < commands.size()) failed.command = commands[records.size()].text;
      } catch (const reesblow::ScriptError&) {
      }
      failed.text = "error: " + e.message();
      failed.result = {{"kind", "error"}, {"message", e.message()}};
      failed.status = "error";
      records.push_back(std::move(failed));
    }
  }
  std::cout << reesblow::format_document(records, mode, timing);
  std::cout.flush();
  if (!std::cout) return kIoError;
  return status;
}
