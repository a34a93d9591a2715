#include "intlap/strictly_chordal.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "detail.hpp"
#include "intlap/errors.hpp"
#include "intlap/twins.hpp"

namespace intlap {

namespace {

bool separators_disjoint(const CliqueStructure& cs) {
  return std::none_of(cs.vertex_separator_id.begin(), cs.vertex_separator_id.end(),
                      [](int id) { return id == CliqueStructure::kSeveralSeparators; });
}

void require_strict(const CliqueStructure& cs) {
  if (!separators_disjoint(cs)) {
    throw HypothesisError("minimal vertex separators are not pairwise disjoint");
  }
}

int priority(Provenance p) {
  switch (p) {
    case Provenance::Universal: return 0;
    case Provenance::SeparatorT6: return 1;
    case Provenance::BoundaryCliqueSizeC1a: return 2;
    case Provenance::SeparatorCountC1b: return 3;
    case Provenance::NonBoundarySimplicialT3: return 4;
    case Provenance::TrueTwin: return 5;
    case Provenance::FalseTwin: return 6;
  }
  return 7;
}

}  // namespace

bool recognize_strictly_chordal(const Graph& g, const CliqueStructure& cs) {
  if (cs.vertex_separator_id.size() != g.n()) {
    throw std::invalid_argument("clique structure does not belong to this graph");
  }
  return separators_disjoint(cs);
}

namespace {

void separator_entries(const Graph& g, const CliqueStructure& cs,
                       std::vector<SpectralEntry>& out) {
  for (const auto& sep : cs.separators) {
    if (sep.vertices.size() < 2) continue;
    // All members are true twins, hence share one degree.
    const auto d = g.degree(sep.vertices.front());
    out.push_back({static_cast<std::int64_t>(d + 1),
                   static_cast<std::int64_t>(sep.vertices.size() - 1), Provenance::SeparatorT6,
                   sep.vertices, {}});
  }
}

void boundary_entries(const std::vector<BoundaryFamily>& families,
                      std::vector<SpectralEntry>& out) {
  for (const auto& fam : families) {
    if (!fam.in_starred_set()) continue;
    for (const auto& member : fam.cliques) {
      if (member.simplicials.size() < 2) continue;
      out.push_back({static_cast<std::int64_t>(member.clique_size),
                     static_cast<std::int64_t>(member.simplicials.size() - 1),
                     Provenance::BoundaryCliqueSizeC1a, member.simplicials, {}});
    }
    out.push_back({static_cast<std::int64_t>(fam.separator.size()),
                   static_cast<std::int64_t>(fam.cliques.size() - 1),
                   Provenance::SeparatorCountC1b, fam.pooled_simplicials, {}});
  }
}

void non_boundary_entries(const CliqueStructure& cs, const std::vector<BoundaryFamily>& families,
                          std::vector<SpectralEntry>& out) {
  std::vector<char> covered(cs.cliques.size(), 0);
  for (const auto& fam : families) {
    if (!fam.in_starred_set()) continue;
    for (const auto& member : fam.cliques) covered[member.clique] = 1;
  }
  for (std::size_t q = 0; q < cs.cliques.size(); ++q) {
    if (covered[q]) continue;
    const auto& clique = cs.cliques[q];
    if (std::count_if(clique.begin(), clique.end(), [&](Vertex v) { return cs.simplicial[v]; }) < 2) {
      continue;
    }
    VertexSet p = cs.simplicial_members(q);
    if (p.size() < 2) continue;
    out.push_back({static_cast<std::int64_t>(cs.cliques[q].size()),
                   static_cast<std::int64_t>(p.size() - 1), Provenance::NonBoundarySimplicialT3,
                   std::move(p), {}});
  }
}

StructuralSpectrum sorted(std::vector<SpectralEntry> entries) {
  StructuralSpectrum out{std::move(entries), false};
  sort_entries(out);
  return out;
}

}  // namespace

StructuralSpectrum separator_eigenvalues(const Graph& g, const CliqueStructure& cs) {
  if (!is_connected(g)) throw HypothesisError("graph is not connected");
  require_strict(cs);
  std::vector<SpectralEntry> out;
  separator_entries(g, cs, out);
  return sorted(std::move(out));
}

std::vector<BoundaryFamily> boundary_families(const CliqueStructure& cs) {
  require_strict(cs);
  std::vector<BoundaryFamily> families;
  std::vector<std::int32_t> family_of(cs.separators.size(), -1);

  for (std::size_t q : boundary_cliques(cs)) {
    int sid = CliqueStructure::kNoSeparator;
    std::size_t non_simplicial = 0;
    for (Vertex v : cs.cliques[q]) {
      if (cs.simplicial[v]) continue;
      ++non_simplicial;
      const int id = cs.vertex_separator_id[v];
      if (sid == CliqueStructure::kNoSeparator) sid = id;
      if (id != sid) sid = CliqueStructure::kSeveralSeparators;
    }
    if (non_simplicial == 0) continue;
    if (sid < 0 || cs.separators[sid].vertices.size() != non_simplicial) {
      throw std::logic_error("boundary clique does not contain exactly one separator");
    }
    if (family_of[sid] < 0) {
      family_of[sid] = static_cast<std::int32_t>(families.size());
      families.push_back({static_cast<std::size_t>(sid), cs.separators[sid].vertices, {}, {}, {}});
    }
    families[family_of[sid]].cliques.push_back(
        {q, cs.cliques[q].size(), cs.simplicial_members(q)});
  }

  for (auto& fam : families) {
    VertexSet singles;
    for (const auto& member : fam.cliques) {
      fam.pooled_simplicials.insert(fam.pooled_simplicials.end(), member.simplicials.begin(),
                                    member.simplicials.end());
      // p in P_k has N(p) = Q_k \ {p}; two pooled vertices from different
      // cliques share it only when both P-sets are singletons.
      if (member.simplicials.size() == 1) singles.push_back(member.simplicials.front());
    }
    std::sort(fam.pooled_simplicials.begin(), fam.pooled_simplicials.end());
    if (singles.size() >= 2) {
      std::sort(singles.begin(), singles.end());
      fam.false_twin_subset = std::move(singles);
    }
  }
  std::sort(families.begin(), families.end(), [](const BoundaryFamily& a, const BoundaryFamily& b) {
    return a.separator_id < b.separator_id;
  });
  return families;
}

StructuralSpectrum boundary_eigenvalues(const std::vector<BoundaryFamily>& families) {
  std::vector<SpectralEntry> out;
  boundary_entries(families, out);
  return sorted(std::move(out));
}

StructuralSpectrum non_boundary_simplicial_eigenvalues(
    const CliqueStructure& cs, const std::vector<BoundaryFamily>& families) {
  std::vector<SpectralEntry> out;
  non_boundary_entries(cs, families, out);
  return sorted(std::move(out));
}

std::size_t uniquely_provided_count(const BoundaryFamily& family) {
  if (!family.in_starred_set()) {
    throw HypothesisError("family has fewer than two boundary cliques");
  }
  std::size_t from_cliques = 0;
  for (const auto& member : family.cliques) from_cliques += member.simplicials.size() - 1;
  const std::size_t pool = family.pooled_simplicials.size();
  if (family.false_twin_subset.empty()) return pool - 1 - from_cliques;
  return pool - from_cliques - family.false_twin_subset.size();
}

StructuralSpectrum deduplicate(std::size_t n, std::vector<SpectralEntry> entries) {
  // Stable bucket pass by provenance priority.
  std::array<std::vector<std::uint32_t>, 7> by_priority;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    by_priority[priority(entries[i].provenance)].push_back(static_cast<std::uint32_t>(i));
  }

  // Kept entries indexed by each anchor vertex, as singly linked lists.
  std::vector<std::int32_t> head(n, -1);
  std::vector<std::int32_t> link_next;
  std::vector<std::uint32_t> link_entry;

  StructuralSpectrum out;
  for (const auto& bucket : by_priority) {
    for (std::uint32_t i : bucket) {
      SpectralEntry& e = entries[i];
      if (e.multiplicity <= 0) continue;
      bool absorbed = false;
      if (!e.anchor.empty()) {
        for (std::int32_t l = head[e.anchor.front()]; l >= 0 && !absorbed; l = link_next[l]) {
          SpectralEntry& keeper = out.entries[link_entry[l]];
          if (keeper.lambda != e.lambda || keeper.multiplicity < e.multiplicity) continue;
          if (!std::includes(keeper.anchor.begin(), keeper.anchor.end(), e.anchor.begin(),
                             e.anchor.end())) {
            continue;
          }
          if (keeper.provenance != e.provenance &&
              std::find(keeper.also.begin(), keeper.also.end(), e.provenance) ==
                  keeper.also.end()) {
            keeper.also.push_back(e.provenance);
          }
          absorbed = true;
        }
      }
      if (absorbed) continue;
      const auto kept = static_cast<std::uint32_t>(out.entries.size());
      for (Vertex v : e.anchor) {
        link_next.push_back(head[v]);
        link_entry.push_back(kept);
        head[v] = static_cast<std::int32_t>(link_next.size() - 1);
      }
      out.entries.push_back(std::move(e));
    }
  }
  sort_entries(out);
  return out;
}

StructuralSpectrum structural_pipeline(const Graph& g) {
  if (!is_connected(g)) {
    throw HypothesisError("structural pipeline requires a connected graph");
  }
  std::vector<SpectralEntry> all = detail::twin_entries(g, twin_partition(g));

  const ChordalRecognition rec = detail::recognize_connected(g);
  if (!rec.chordal || !separators_disjoint(*rec.structure)) {
    StructuralSpectrum out = deduplicate(g.n(), std::move(all));
    out.partial = true;
    return out;
  }
  const CliqueStructure& cs = *rec.structure;
  separator_entries(g, cs, all);
  const auto families = boundary_families(cs);
  boundary_entries(families, all);
  non_boundary_entries(cs, families, all);
  return deduplicate(g.n(), std::move(all));
}

}  // namespace intlap
