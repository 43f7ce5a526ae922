#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "chiwb/errors.hpp"
#include "chiwb/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"chiwb - intersection multiplicity workbench"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute a session file and print a report");
  std::string path;
  std::string format = "text";
  std::string field;
  std::uint64_t budget = chiwb::budget::kDefaultLimit;
  std::uint64_t seed = 12345;
  bool timing = false;
  run->add_option("session", path, "session file")->required();
  run->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--field", field, "override declared fields: QQ or FF:<p>");
  run->add_option("--budget", budget, "reduction step budget per command");
  run->add_option("--seed", seed, "seed for scan commands");
  run->add_flag("--timing", timing, "include per-command timings");

  CLI11_PARSE(app, argc, argv);

  chiwb::SessionOptions options;
  options.format = format == "json" ? chiwb::SessionOptions::Format::Json
                                    : chiwb::SessionOptions::Format::Text;
  options.budget = budget;
  options.seed = seed;
  options.timing = timing;
  if (!field.empty()) {
    options.has_field_override = true;
    try {
      if (field == "QQ") {
        options.field_override = chiwb::Field::rationals();
      } else if (field.rfind("FF:", 0) == 0) {
        options.field_override =
            chiwb::Field::prime_field(static_cast<std::uint32_t>(std::stoul(field.substr(3))));
      } else {
        std::cerr << "unrecognized --field value '" << field << "'\n";
        return 1;
      }
    } catch (const chiwb::Error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }

  chiwb::RunOutcome outcome = chiwb::run_session_file(path, options);
  if (options.format == chiwb::SessionOptions::Format::Json)
    std::cout << chiwb::emit_json(outcome, options);
  else
    std::cout << chiwb::emit_text(outcome, options);
  return outcome.exit_code;
}
