// Copyright 2026 The spectator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_support.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "spectator/errors.hpp"

namespace spectator::cli {

namespace fs = std::filesystem;

void atomic_write(const std::string &path, const std::string &content) {
    fs::path target(path);
    if (target.has_parent_path() && !fs::is_directory(target.parent_path())) {
        throw IoError("output directory '" + target.parent_path().string() + "' does not exist");
    }
    std::string temp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + temp + "': " + std::strerror(errno));
        }
        out << content;
        out.flush();
        if (!out) {
            throw IoError("write to '" + temp + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp);
        throw IoError("cannot move output into place at '" + path + "': " + ec.message());
    }
}

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::pair<std::string, std::string> key_value(const std::string &item, const std::string &what) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw ValidationError(what + ": expected LABEL=VALUE, got '" + item + "'");
    }
    return {item.substr(0, eq), item.substr(eq + 1)};
}

double to_double(const std::string &text, const std::string &what) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size()) {
        throw ValidationError(what + ": '" + text + "' is not a number");
    }
    return v;
}

}  // namespace

FluxPoint parse_flux(const std::string &text) {
    FluxPoint out;
    for (const auto &item : split(text, ',')) {
        auto [label, value] = key_value(item, "--flux");
        out.biases[label] = to_double(value, "--flux " + label);
    }
    return out;
}

LabelPair parse_pair(const std::string &text) {
    auto parts = split(text, ',');
    if (parts.size() != 2 || parts[0] == parts[1]) {
        throw ValidationError("expected two distinct labels 'A,B', got '" + text + "'");
    }
    return {parts[0], parts[1]};
}

SpectatorState parse_spectator(const std::string &text) {
    SpectatorState out;
    for (const auto &item : split(text, ',')) {
        auto [label, value] = key_value(item, "--spectator");
        double n = to_double(value, "--spectator " + label);
        if (n != 0 && n != 1) {
            throw ValidationError("--spectator " + label + ": state must be 0 or 1");
        }
        out[label] = static_cast<int>(n);
    }
    return out;
}

std::vector<std::string> parse_labels(const std::string &text) {
    return split(text, ',');
}

std::map<std::string, PulseShape> parse_companions(const std::string &text) {
    std::map<std::string, PulseShape> out;
    for (const auto &item : split(text, ',')) {
        auto [label, value] = key_value(item, "--companion");
        std::vector<std::string> parts = split(value, ':');
        if (parts.size() != 3) {
            throw ValidationError("--companion " + label + ": expected amplitude:rise_ns:hold_ns");
        }
        PulseShape p{to_double(parts[0], "--companion " + label), to_double(parts[1], "--companion " + label),
                     to_double(parts[2], "--companion " + label)};
        if (!out.emplace(label, p).second) {
            throw ValidationError("--companion: coupler '" + label + "' given twice");
        }
    }
    return out;
}

std::string write_manifest(const std::string &prefix, const RunManifest &manifest) {
    nlohmann::ordered_json j;
    j["command"] = manifest.command;
    j["device_file"] = manifest.device_file;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[k, v] : manifest.parameters) {
        params[k] = v;
    }
    j["parameters"] = params;
    j["seed"] = manifest.seed;
    j["output_paths"] = manifest.output_paths;
    j["argv"] = manifest.argv;
    std::string path = prefix + ".manifest.json";
    atomic_write(path, j.dump(2) + "\n");
    return path;
}

int run_guarded(const std::function<void()> &body) {
    try {
        body();
        return kExitOk;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PhysicsError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace spectator::cli
