// Copyright 2026 the djc-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All functionality flows through the shared
// library's C interface (djc.h); this file only handles argument parsing,
// config file plumbing, and report/artifact placement.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "djc.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

int load_config(const CommonArgs& args, json& config) {
  std::ifstream in(args.config_path);
  if (!in) {
    std::cerr << "error: cannot open config file " << args.config_path
              << "\n";
    return 2;
  }
  try {
    in >> config;
  } catch (const std::exception& e) {
    std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  if (args.seed) {
    config["seed"] = *args.seed;
  }
  // a "code_file" entry is resolved here so the library only ever sees
  // inline documents
  if (config.contains("code_file")) {
    const fs::path path = config.at("code_file").get<std::string>();
    std::ifstream code_in(path);
    if (!code_in) {
      std::cerr << "error: cannot open code file " << path << "\n";
      return 2;
    }
    try {
      json code;
      code_in >> code;
      config["code"] = std::move(code);
    } catch (const std::exception& e) {
      std::cerr << "error: code file is not valid JSON: " << e.what() << "\n";
      return 2;
    }
    config.erase("code_file");
  }
  return 0;
}

bool write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << contents;
  return true;
}

/// Prepends the run header (timestamp isolated in its own key so reports
/// stay byte-comparable after stripping it).
std::string finalize_report(const char* report_json) {
  json report = json::parse(report_json);
  const auto now = std::chrono::system_clock::now();
  report["timestamp"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          now.time_since_epoch())
          .count();
  report["version"] = djc_version();
  return report.dump(2) + "\n";
}

int status_to_exit(djc_status status) {
  switch (status) {
    case DJC_OK:
      return 0;
    case DJC_ERROR_VERIFY:
      return 1;
    case DJC_ERROR_CONFIG:
      return 2;
    default:
      return 3;
  }
}

int run(const std::string& command, const CommonArgs& args) {
  json config;
  if (int rc = load_config(args, config); rc != 0) return rc;
  const std::string config_text = config.dump();

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);

  char* report = nullptr;
  char* extra = nullptr;
  djc_status status = DJC_ERROR_INTERNAL;
  fs::path extra_path;

  if (command == "verify") {
    status = djc_verify(config_text.c_str(), &report);
  } else if (command == "compile") {
    status = djc_compile(config_text.c_str(), &report, &extra);
    extra_path = fs::path(args.out_dir) / "schedule.json";
  } else if (command == "simulate") {
    status = djc_simulate(config_text.c_str(), &report, &extra);
    extra_path = fs::path(args.out_dir) / "trajectories.csv";
  } else if (command == "prep-check") {
    status = djc_prep_check(config_text.c_str(), &report, &extra);
    extra_path = fs::path(args.out_dir) / "readout.csv";
  }

  if (report == nullptr) {
    std::cerr << "error: " << djc_last_error() << "\n";
    djc_string_free(extra);
    return status_to_exit(status);
  }

  const fs::path report_path = fs::path(args.out_dir) / "report.json";
  const std::string report_text = finalize_report(report);
  bool io_ok = write_file(report_path, report_text);
  if (extra != nullptr && extra[0] != '\0') {
    io_ok = write_file(extra_path, extra) && io_ok;
  }
  djc_string_free(report);
  djc_string_free(extra);
  if (!io_ok) return 3;

  const json parsed = json::parse(report_text);
  if (status == DJC_OK) {
    std::cout << command << ": ok";
  } else {
    std::cout << command << ": FAILED (" << djc_last_error() << ")";
  }
  if (parsed.contains("mean_fidelity")) {
    std::cout << ", mean fidelity "
              << parsed.at("mean_fidelity").get<double>();
  }
  std::cout << " -> " << report_path.string() << "\n";
  return status_to_exit(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detected-jump code simulator and encoded-logic compiler"};
  app.require_subcommand(1);

  CommonArgs args;
  const char* names[] = {"verify", "compile", "simulate", "prep-check"};
  const char* descriptions[] = {
      "build a code and check the protection conditions",
      "compile a logical circuit to a pulse schedule",
      "run a seeded spontaneous-emission trajectory ensemble",
      "analyze cooling-based preparation and encoded readout"};
  for (int k = 0; k < 4; ++k) {
    auto* sub = app.add_subcommand(names[k], descriptions[k]);
    sub->add_option("--config", args.config_path, "JSON config file")
        ->required();
    sub->add_option("--seed", args.seed, "override the config seed");
    sub->add_option("--out", args.out_dir, "output directory");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, args);
}
