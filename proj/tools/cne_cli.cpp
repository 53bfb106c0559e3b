// Copyright 2026 The CNE Authors. All Rights Reserved.
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

// cne: command-line front end over the C API.
//
//   cne <build-vocab|walk|train|embed|eval> [--config FILE] [--KEY VALUE]...
//
// Settings layer as defaults < CNE_SEED < config file < flags.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cne/cne.h"

namespace {

constexpr const char* kCommands[] = {"build-vocab", "walk", "train", "embed",
                                     "eval"};

std::string usage() {
  std::string out =
      "usage: cne <command> [--config FILE] [--KEY VALUE]...\n\ncommands:\n";
  for (const char* c : kCommands) out += std::string("  ") + c + "\n";
  out += "\nkeys (also accepted as KEY=VALUE lines in the config file):\n";
  for (size_t i = 0; i < cne_config_key_count(); ++i) {
    char line[160];
    std::snprintf(line, sizeof(line), "  --%-18s %s\n", cne_config_key_name(i),
                  cne_config_key_help(i));
    out += line;
  }
  return out;
}

int report_failure(cne_status status) {
  std::fprintf(stderr, "cne: %s: %s\n", cne_status_name(status),
               cne_last_error());
  return 1;
}

struct ConfigHandle {
  cne_config* ptr = nullptr;
  ~ConfigHandle() { cne_config_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(usage().c_str(), stderr);
    return 2;
  }
  const std::string command = argv[1];
  if (command == "-h" || command == "--help") {
    std::fputs(usage().c_str(), stdout);
    return 0;
  }
  if (!cne_command_valid(command.c_str())) {
    std::fprintf(stderr, "cne: unknown command '%s'\n\n%s", command.c_str(),
                 usage().c_str());
    return 2;
  }

  CLI::App app{"Compositional network embedding", "cne " + command};
  std::string config_file;
  app.add_option("--config", config_file, "flat key=value config file");
  std::map<std::string, std::string> flags;
  std::vector<CLI::Option*> options;
  for (size_t i = 0; i < cne_config_key_count(); ++i) {
    const std::string name = cne_config_key_name(i);
    options.push_back(
        app.add_option("--" + name, flags[name], cne_config_key_help(i)));
  }
  try {
    app.parse(argc - 1, argv + 1);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ConfigHandle config;
  if (cne_status s = cne_config_new(&config.ptr); s != CNE_OK)
    return report_failure(s);
  if (cne_status s = cne_config_apply_env(config.ptr); s != CNE_OK)
    return report_failure(s);
  if (!config_file.empty())
    if (cne_status s = cne_config_load_file(config.ptr, config_file.c_str());
        s != CNE_OK)
      return report_failure(s);
  for (size_t i = 0; i < options.size(); ++i) {
    if (options[i]->count() == 0) continue;
    const std::string name = cne_config_key_name(i);
    const std::string source = "--" + name;
    if (cne_status s = cne_config_set(config.ptr, name.c_str(),
                                      flags[name].c_str(), source.c_str());
        s != CNE_OK)
      return report_failure(s);
  }

  auto on_message = [](const char* message, void*) {
    std::fprintf(stderr, "cne: %s\n", message);
  };
  if (cne_status s = cne_run(config.ptr, command.c_str(), on_message, nullptr);
      s != CNE_OK)
    return report_failure(s);
  return 0;
}
