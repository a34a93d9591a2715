#include "intlap/structural_spectrum.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace intlap {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 7> kNames{{
    {Provenance::Universal, "Universal"},
    {Provenance::FalseTwin, "FalseTwin"},
    {Provenance::TrueTwin, "TrueTwin"},
    {Provenance::SeparatorT6, "SeparatorT6"},
    {Provenance::BoundaryCliqueSizeC1a, "BoundaryCliqueSizeC1a"},
    {Provenance::SeparatorCountC1b, "SeparatorCountC1b"},
    {Provenance::NonBoundarySimplicialT3, "NonBoundarySimplicialT3"},
}};

}  // namespace

std::string_view to_string(Provenance p) {
  for (const auto& [value, name] : kNames) {
    if (value == p) return name;
  }
  return "?";
}

std::optional<Provenance> provenance_from_string(std::string_view name) {
  for (const auto& [value, n] : kNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

std::map<std::int64_t, std::int64_t> condense(const StructuralSpectrum& s) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& e : s.entries) out[e.lambda] += e.multiplicity;
  return out;
}

void sort_entries(StructuralSpectrum& s) {
  // Sort compact keys rather than the entries; anchors are compared in full
  // only when lambda and the first anchor vertex tie.
  struct Key {
    std::int64_t lambda;
    Vertex front;
    std::uint32_t index;
  };
  const auto& entries = s.entries;
  std::vector<Key> keys(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& a = entries[i].anchor;
    keys[i] = {entries[i].lambda, a.empty() ? Vertex{-1} : a.front(),
               static_cast<std::uint32_t>(i)};
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& x, const Key& y) {
    if (x.lambda != y.lambda) return x.lambda < y.lambda;
    if (x.front != y.front) return x.front < y.front;
    const auto& a = entries[x.index];
    const auto& b = entries[y.index];
    return std::tie(a.anchor, a.provenance) < std::tie(b.anchor, b.provenance);
  });
  std::vector<SpectralEntry> sorted;
  sorted.reserve(entries.size());
  for (const Key& k : keys) sorted.push_back(std::move(s.entries[k.index]));
  s.entries = std::move(sorted);
}

std::string format_condensed(const std::map<std::int64_t, std::int64_t>& condensed) {
  std::string out;
  for (auto it = condensed.rbegin(); it != condensed.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += std::to_string(it->first) + "^(" + std::to_string(it->second) + ")";
  }
  return out;
}

std::string format_entry(const Graph& g, const SpectralEntry& e) {
  return std::to_string(e.lambda) + ' ' + std::to_string(e.multiplicity) + ' ' +
         std::string(to_string(e.provenance)) + ' ' + format_set(g, e.anchor);
}

}  // namespace intlap
