// lorentzkit <subcommand> [--input FILE|-] [--precision-bits N] [--output FILE]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lorentzkit/cli.hpp"

namespace {

using lorentzkit::cli::CommandResult;

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int emit(const CommandResult& result, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << result.document;
    return result.exit_code;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << output_path << " for writing\n";
    return lorentzkit::cli::kInputError;
  }
  out << result.document;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for hyperbolic reflection groups over Q and Q(sqrt(d))"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string output_path;
  unsigned precision_bits = lorentzkit::kDefaultPrecisionBits;

  for (auto sub : lorentzkit::cli::all_subcommands()) {
    CLI::App* cmd = app.add_subcommand(std::string(lorentzkit::cli::subcommand_name(sub)));
    cmd->add_option("--input,-i", input_path, "input JSON file, '-' for stdin");
    cmd->add_option("--precision-bits", precision_bits, "enclosure precision in bits");
    cmd->add_option("--output,-o", output_path, "write the JSON document here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    const std::string name = subs.empty() ? "" : subs.front()->get_name();
    std::cout << lorentzkit::cli::input_error(name, "USAGE", "argv", e.what()).document;
    return lorentzkit::cli::kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  lorentzkit::cli::CommandRequest request;
  request.subcommand = *lorentzkit::cli::parse_subcommand(name);
  request.precision_bits = precision_bits;

  if (const char* cap = std::getenv("LORENTZKIT_WORD_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(cap, &used);
      if (used != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      request.word_cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      return emit(lorentzkit::cli::input_error(name, "INVALID_ARGUMENT", "LORENTZKIT_WORD_CAP",
                                               "must be a positive integer"),
                  output_path);
    }
  }

  if (!read_all(input_path, request.input))
    return emit(lorentzkit::cli::input_error(name, "IO_ERROR", "--input", "cannot read " + input_path),
                output_path);

  return emit(lorentzkit::cli::run(request), output_path);
}
