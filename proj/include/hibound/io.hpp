#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hibound/bounds.hpp"
#include "hibound/exact_alpha.hpp"
#include "hibound/hypergraph.hpp"
#include "hibound/verify.hpp"

namespace hibound {

// Hypergraph files:
//
//   # comment
//   k n
//   v1 v2 ... vk      one edge per line
//
// Vertices are 0-based unless one_based is set. Blank lines and lines whose
// first non-blank character is '#' are skipped.

struct ParseOptions {
  bool one_based = false;
};

/// Throws Error with code MalformedHeader, EdgeArity, IndexOutOfRange or
/// DuplicateEdgeLine and the 1-based line number.
Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& opts = {});

Hypergraph load_hypergraph(const std::filesystem::path& path,
                           const ParseOptions& opts = {});

/// Canonical text form; parse_hypergraph reads it back to an equal value.
std::string serialize_hypergraph(const Hypergraph& h);

enum class Format { Json, Csv, Table };

/// Format from "json", "csv" or "table"; throws InvalidParams otherwise.
Format parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

/// {"n","m","k","bounds":{...},"alpha","alpha_exhausted","warnings"}
Json report_to_json(const BoundReport& r);
std::string format_report(const BoundReport& r, Format f);

Json alpha_to_json(const Hypergraph& h, const AlphaResult& a);
std::string format_alpha(const Hypergraph& h, const AlphaResult& a, Format f);

Json sweep_to_json(const SweepResult& s);
std::string format_sweep(const SweepResult& s, Format f);

Json examples_to_json(const ExampleReport& r);
std::string format_examples(const ExampleReport& r, Format f);

}  // namespace hibound
