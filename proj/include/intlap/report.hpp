#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intlap/graph.hpp"

namespace intlap {

// Reports speak in vertex labels so they stand on their own.
using LabelSet = std::vector<std::string>;

struct TwinClassReport {
  LabelSet members;
  std::size_t degree = 0;
  friend bool operator==(const TwinClassReport&, const TwinClassReport&) = default;
};

struct SeparatorReport {
  LabelSet vertices;
  std::size_t multiplicity = 0;
  friend bool operator==(const SeparatorReport&, const SeparatorReport&) = default;
};

struct FamilyCliqueReport {
  LabelSet clique;
  LabelSet simplicials;
  friend bool operator==(const FamilyCliqueReport&, const FamilyCliqueReport&) = default;
};

struct FamilyReport {
  LabelSet separator;
  std::vector<FamilyCliqueReport> cliques;
  std::size_t pooled = 0;
  LabelSet false_twins;
  std::optional<std::size_t> uniquely_provided;  // only for |B(S)| > 1
  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

struct EntryReport {
  std::int64_t lambda = 0;
  std::int64_t multiplicity = 0;
  std::string provenance;
  LabelSet anchor;
  std::vector<std::string> also;
  friend bool operator==(const EntryReport&, const EntryReport&) = default;
};

struct CondensedReport {
  std::int64_t lambda = 0;
  std::int64_t multiplicity = 0;
  friend bool operator==(const CondensedReport&, const CondensedReport&) = default;
};

struct AnalysisReport {
  static constexpr const char* kSchema = "intlap.analyze/1";

  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<TwinClassReport> false_twins;
  std::vector<TwinClassReport> true_twins;
  LabelSet universal;
  bool chordal = false;
  LabelSet witness_cycle;
  bool strictly_chordal = false;
  std::vector<LabelSet> cliques;
  std::vector<SeparatorReport> separators;
  std::vector<FamilyReport> families;  // separators with at least one boundary clique
  bool partial = false;
  std::vector<EntryReport> entries;
  std::vector<CondensedReport> condensed;  // descending lambda

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full structural analysis of a connected graph. Throws HypothesisError
/// if `g` is disconnected.
AnalysisReport analyze(const Graph& g);

std::string to_text(const AnalysisReport& r);
std::string to_json(const AnalysisReport& r, int indent = 2);
/// Inverse of to_json. Throws std::invalid_argument on schema mismatch.
AnalysisReport report_from_json(const std::string& text);

}  // namespace intlap
