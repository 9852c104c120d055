// sympbf: analyze symmetric pseudo-Boolean functions from the command line.
//
// Reads one JSON document (stdin or -i), runs the requested analysis, and
// writes one JSON report (stdout or -o). Exit codes: 0 success, 1 parse or
// input error, 2 non-symmetric input, 3 root-finder failure, 4 enumeration
// limit exceeded, 5 verification mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sympbf/sympbf.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sympbf::SpecParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Write-to-temp then rename, so a failed run never leaves a partial file.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::filesystem::path target(path);
  const std::filesystem::path temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + temp.string());
    out << content;
    if (!out.good()) {
      out.close();
      std::filesystem::remove(temp);
      throw std::runtime_error("failed writing output file: " + temp.string());
    }
  }
  std::filesystem::rename(temp, target);
}

struct CliConfig {
  std::string input_path;
  std::string output_path;
  sympbf::AnalysisOptions options;
  bool flatten = false;
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg, bool with_verify) {
  cmd->add_option("-i,--input", cfg.input_path, "Input JSON file (default: stdin)");
  cmd->add_option("-o,--output", cfg.output_path, "Output JSON file (default: stdout)");
  cmd->add_option("--tol-residual", cfg.options.tol_residual, "Root residual tolerance");
  cmd->add_option("--tol-int", cfg.options.tol_int, "Integer-root matching tolerance");
  cmd->add_option("--max-n", cfg.options.max_n, "Cap on any 2^n enumeration");
  if (with_verify) cmd->add_flag("--verify", cfg.options.verify, "Attach oracle cross-checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sympbf: convert, factor, and kernel-classify symmetric pseudo-Boolean functions"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto* convert = app.add_subcommand("convert", "Coefficient bases and Hamming profile");
  auto* factor = app.add_subcommand("factor", "Factored form and kernel classification");
  auto* eval = app.add_subcommand("eval", "Evaluate at a Boolean input or real point");
  auto* embed = app.add_subcommand("embed", "Diagonal matrix embedding (or --flatten back)");
  auto* verify = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  add_common_flags(convert, cfg, true);
  add_common_flags(factor, cfg, true);
  add_common_flags(eval, cfg, false);
  add_common_flags(embed, cfg, false);
  add_common_flags(verify, cfg, false);
  embed->add_flag("--flatten", cfg.flatten, "Read a diagonal document, print the multilinear form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const nlohmann::json input = nlohmann::json::parse(read_input(cfg.input_path));
    sympbf::CommandResult result;
    if (convert->parsed())
      result = sympbf::run_convert(input, cfg.options);
    else if (factor->parsed())
      result = sympbf::run_factor(input, cfg.options);
    else if (eval->parsed())
      result = sympbf::run_eval(input, cfg.options);
    else if (embed->parsed())
      result = sympbf::run_embed(input, cfg.options, cfg.flatten);
    else
      result = sympbf::run_verify(input, cfg.options);
    write_output(cfg.output_path, result.report.dump());
    return result.exit_code;
  } catch (const sympbf::NotSymmetricError& e) {
    std::cerr << "sympbf: " << e.what() << "\n";
    return 2;
  } catch (const sympbf::RootFindingError& e) {
    std::cerr << "sympbf: " << e.what() << "\n";
    return 3;
  } catch (const sympbf::EnumerationLimitError& e) {
    std::cerr << "sympbf: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "sympbf: invalid JSON input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sympbf: " << e.what() << "\n";
    return 1;
  }
}
