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

#include "djc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "djc/code_space.hpp"
#include "djc/commands.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, s.c_str(), s.size() + 1);
  }
  return out;
}

void set_output(char** slot, const std::string& value) {
  if (slot != nullptr) {
    *slot = dup_string(value);
  }
}

using CommandFn = djc::CommandOutput (*)(const nlohmann::json&);

djc_status run_command(CommandFn fn, const char* config_json,
                       char** report_json, char** extra_slot,
                       std::string djc::CommandOutput::* extra_member) {
  if (config_json == nullptr) {
    g_last_error = "config_json is NULL";
    return DJC_ERROR_INVALID;
  }
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(config_json);
  } catch (const std::exception& e) {
    g_last_error = std::string("config is not valid JSON: ") + e.what();
    return DJC_ERROR_CONFIG;
  }
  try {
    const djc::CommandOutput out = fn(config);
    set_output(report_json, out.report.dump(2));
    if (extra_slot != nullptr && extra_member != nullptr) {
      set_output(extra_slot, out.*extra_member);
    }
    if (out.report.contains("pass") && !out.report.at("pass").get<bool>()) {
      g_last_error = "verification checks failed; see report";
      return DJC_ERROR_VERIFY;
    }
    return DJC_OK;
  } catch (const djc::ConfigError& e) {
    g_last_error = e.what();
    return DJC_ERROR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DJC_ERROR_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DJC_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

struct djc_code {
  djc::CodeSpec spec;
};

const char* djc_last_error(void) { return g_last_error.c_str(); }

const char* djc_version(void) { return "0.1.0"; }

void djc_string_free(char* s) { std::free(s); }

djc_code* djc_code_build(int n_pairs, const int* pair_signs) {
  try {
    std::vector<int> signs;
    if (pair_signs != nullptr) {
      signs.assign(pair_signs, pair_signs + n_pairs);
    } else {
      signs.assign(static_cast<std::size_t>(n_pairs > 0 ? n_pairs : 0), -1);
    }
    auto* code = new djc_code{djc::build_code(n_pairs, signs)};
    return code;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

djc_code* djc_code_from_json(const char* json_text) {
  if (json_text == nullptr) {
    g_last_error = "json_text is NULL";
    return nullptr;
  }
  try {
    return new djc_code{djc::code_from_json(json_text)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void djc_code_free(djc_code* code) { delete code; }

int djc_code_n_pairs(const djc_code* code) {
  return code != nullptr ? code->spec.n_pairs : -1;
}

int djc_code_n_qubits(const djc_code* code) {
  return code != nullptr ? code->spec.n_qubits() : -1;
}

int djc_code_n_logical(const djc_code* code) {
  return code != nullptr ? code->spec.n_logical() : -1;
}

char* djc_code_to_json(const djc_code* code) {
  if (code == nullptr) {
    g_last_error = "code handle is NULL";
    return nullptr;
  }
  try {
    return dup_string(djc::code_to_json(code->spec));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

djc_status djc_verify(const char* config_json, char** report_json) {
  return run_command(&djc::cmd_verify, config_json, report_json, nullptr,
                     nullptr);
}

djc_status djc_compile(const char* config_json, char** report_json,
                       char** schedule_json) {
  if (config_json == nullptr) {
    g_last_error = "config_json is NULL";
    return DJC_ERROR_INVALID;
  }
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(config_json);
  } catch (const std::exception& e) {
    g_last_error = std::string("config is not valid JSON: ") + e.what();
    return DJC_ERROR_CONFIG;
  }
  try {
    const djc::CommandOutput out = djc::cmd_compile(config);
    set_output(report_json, out.report.dump(2));
    set_output(schedule_json, out.schedule.dump(2));
    if (!out.report.at("pass").get<bool>()) {
      g_last_error = "compiled schedule failed verification; see report";
      return DJC_ERROR_VERIFY;
    }
    return DJC_OK;
  } catch (const djc::ConfigError& e) {
    g_last_error = e.what();
    return DJC_ERROR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DJC_ERROR_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DJC_ERROR_INTERNAL;
  }
}

djc_status djc_simulate(const char* config_json, char** report_json,
                        char** trajectories_csv) {
  return run_command(&djc::cmd_simulate, config_json, report_json,
                     trajectories_csv,
                     &djc::CommandOutput::trajectories_csv);
}

djc_status djc_prep_check(const char* config_json, char** report_json,
                          char** readout_csv) {
  return run_command(&djc::cmd_prep_check, config_json, report_json,
                     readout_csv, &djc::CommandOutput::readout_csv);
}

}  // extern "C"
