// Copyright 2026 The hypnet Authors
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

#include <array>
#include <charconv>
#include <sstream>

#include "hypnet/nettest.h"

namespace hypnet {

std::string FormatDouble(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("FormatDouble: conversion failed");
  return std::string(buffer.data(), end);
}

std::string FormatResult(const TestResult& result, const ComparisonConfig& cfg) {
  const ComparisonDiagnostics& diag = result.diagnostics;
  std::ostringstream out;
  out << "# hypnet two-sample network comparison\n";
  out << "d_star: " << FormatDouble(result.d_star) << '\n';
  out << "p_value: " << FormatDouble(result.p_value) << '\n';
  out << "reject: " << (result.Rejects(cfg.alpha) ? "true" : "false") << '\n';
  out << "B: " << cfg.bootstrap_replicates << '\n';
  out << "alpha: " << FormatDouble(cfg.alpha) << '\n';
  out << "seed: " << cfg.seed << '\n';
  out << "quadrature_pairs: " << cfg.quadrature_pairs << '\n';
  out << "link_threshold: " << FormatDouble(cfg.link_threshold) << '\n';
  out << "max_retries: " << cfg.max_retries << '\n';
  out << "n1: " << diag.nodes1 << '\n';
  out << "n2: " << diag.nodes2 << '\n';
  out << "dropped_fraction1: " << FormatDouble(diag.dropped_fraction1) << '\n';
  out << "dropped_fraction2: " << FormatDouble(diag.dropped_fraction2) << '\n';
  out << "bandwidth1: " << FormatDouble(diag.bandwidth1) << '\n';
  out << "bandwidth2: " << FormatDouble(diag.bandwidth2) << '\n';
  out << "pooled_bandwidth: " << FormatDouble(diag.pooled_bandwidth) << '\n';
  out << "truncation: " << FormatDouble(diag.truncation) << '\n';
  out << "replicate_retries: " << diag.replicate_retries << '\n';
  out << "replicates:";
  for (std::size_t i = 0; i < result.replicates.size(); ++i) {
    out << (i == 0 ? " " : ",") << FormatDouble(result.replicates[i]);
  }
  out << '\n';
  return out.str();
}

std::map<std::string, std::string> ParseResult(const std::string& document) {
  std::map<std::string, std::string> fields;
  std::istringstream in(document);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("result document: missing ':' in \"" + line + "\"");
    }
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    fields[line.substr(0, colon)] = value;
  }
  return fields;
}

}  // namespace hypnet
