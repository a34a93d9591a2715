#include "intlap/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "intlap/chordal.hpp"
#include "intlap/errors.hpp"
#include "intlap/strictly_chordal.hpp"
#include "intlap/twins.hpp"

namespace intlap {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TwinClassReport, members, degree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SeparatorReport, vertices, multiplicity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyCliqueReport, clique, simplicials)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EntryReport, lambda, multiplicity, provenance, anchor, also)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CondensedReport, lambda, multiplicity)

void to_json(nlohmann::json& j, const FamilyReport& f) {
  j = nlohmann::json{{"separator", f.separator},
                     {"cliques", f.cliques},
                     {"pooled", f.pooled},
                     {"false_twins", f.false_twins},
                     {"uniquely_provided", nullptr}};
  if (f.uniquely_provided) j["uniquely_provided"] = *f.uniquely_provided;
}

void from_json(const nlohmann::json& j, FamilyReport& f) {
  j.at("separator").get_to(f.separator);
  j.at("cliques").get_to(f.cliques);
  j.at("pooled").get_to(f.pooled);
  j.at("false_twins").get_to(f.false_twins);
  const auto& u = j.at("uniquely_provided");
  f.uniquely_provided =
      u.is_null() ? std::nullopt : std::optional<std::size_t>(u.get<std::size_t>());
}

namespace {

LabelSet labels_of(const Graph& g, std::span<const Vertex> vs) {
  LabelSet out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::string braces(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i];
  }
  return out + "}";
}

std::string twin_line(const std::vector<TwinClassReport>& classes) {
  if (classes.empty()) return "none";
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += "; ";
    out += braces(c.members) + " d=" + std::to_string(c.degree);
  }
  return out;
}

}  // namespace

AnalysisReport analyze(const Graph& g) {
  if (!is_connected(g)) throw HypothesisError("graph is not connected");
  AnalysisReport r;
  r.n = g.n();
  r.m = g.m();

  const TwinPartition twins = twin_partition(g);
  for (const auto& c : twins.false_classes) r.false_twins.push_back({labels_of(g, c.members), c.degree});
  for (const auto& c : twins.true_classes) r.true_twins.push_back({labels_of(g, c.members), c.degree});
  r.universal = labels_of(g, twins.universal);

  const ChordalRecognition rec = recognize_chordal(g);
  r.chordal = rec.chordal;
  r.witness_cycle = labels_of(g, rec.witness_cycle);
  if (rec.chordal) {
    const CliqueStructure& cs = *rec.structure;
    for (const auto& c : cs.cliques) r.cliques.push_back(labels_of(g, c));
    for (const auto& s : cs.separators) r.separators.push_back({labels_of(g, s.vertices), s.multiplicity});
    r.strictly_chordal = recognize_strictly_chordal(g, cs);
    if (r.strictly_chordal) {
      for (const auto& fam : boundary_families(cs)) {
        if (fam.cliques.empty()) continue;
        FamilyReport f;
        f.separator = labels_of(g, fam.separator);
        for (const auto& member : fam.cliques) {
          f.cliques.push_back({labels_of(g, cs.cliques[member.clique]),
                               labels_of(g, member.simplicials)});
        }
        f.pooled = fam.pooled_simplicials.size();
        f.false_twins = labels_of(g, fam.false_twin_subset);
        if (fam.in_starred_set()) f.uniquely_provided = uniquely_provided_count(fam);
        r.families.push_back(std::move(f));
      }
    }
  }

  const StructuralSpectrum spectrum = structural_pipeline(g);
  r.partial = spectrum.partial;
  for (const auto& e : spectrum.entries) {
    EntryReport er{e.lambda, e.multiplicity, std::string(to_string(e.provenance)),
                   labels_of(g, e.anchor), {}};
    for (Provenance p : e.also) er.also.emplace_back(to_string(p));
    r.entries.push_back(std::move(er));
  }
  const auto condensed = condense(spectrum);
  for (auto it = condensed.rbegin(); it != condensed.rend(); ++it) {
    r.condensed.push_back({it->first, it->second});
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "graph: n=" << r.n << " m=" << r.m << " connected=true\n";
  out << "zero eigenvalue: 0^(1)\n";
  out << "universal: " << (r.universal.empty() ? "none" : braces(r.universal)) << '\n';
  out << "false twins: " << twin_line(r.false_twins) << '\n';
  out << "true twins: " << twin_line(r.true_twins) << '\n';
  out << "chordal: " << (r.chordal ? "true" : "false") << '\n';
  if (!r.chordal) {
    out << "witness cycle:";
    for (const auto& v : r.witness_cycle) out << ' ' << v;
    out << '\n';
  } else {
    out << "strictly chordal: " << (r.strictly_chordal ? "true" : "false") << '\n';
    out << "maximal cliques:";
    for (const auto& c : r.cliques) out << ' ' << braces(c);
    out << '\n';
    out << "minimal vertex separators:";
    if (r.separators.empty()) out << " none";
    for (const auto& s : r.separators) {
      out << ' ' << braces(s.vertices);
      if (s.multiplicity > 1) out << 'x' << s.multiplicity;
    }
    out << '\n';
    if (r.strictly_chordal) {
      out << "boundary families:" << (r.families.empty() ? " none" : "") << '\n';
      for (const auto& f : r.families) {
        out << "  S=" << braces(f.separator) << " b=" << f.cliques.size() << " pooled=" << f.pooled
            << " false-twins=" << braces(f.false_twins);
        if (f.uniquely_provided) out << " uniquely-provided=" << *f.uniquely_provided;
        out << '\n';
        for (const auto& c : f.cliques) {
          out << "    " << braces(c.clique) << " P=" << braces(c.simplicials) << '\n';
        }
      }
    }
  }
  out << "structural spectrum" << (r.partial ? " (partial)" : "") << ":\n";
  for (const auto& e : r.entries) {
    out << "  " << e.lambda << ' ' << e.multiplicity << ' ' << e.provenance << ' '
        << braces(e.anchor);
    if (!e.also.empty()) {
      out << " also=";
      for (std::size_t i = 0; i < e.also.size(); ++i) out << (i ? "," : "") << e.also[i];
    }
    out << '\n';
  }
  out << "condensed:";
  for (const auto& c : r.condensed) out << ' ' << c.lambda << "^(" << c.multiplicity << ')';
  out << '\n';
  return out.str();
}

std::string to_json(const AnalysisReport& r, int indent) {
  nlohmann::json j{
      {"schema", AnalysisReport::kSchema},
      {"graph", {{"n", r.n}, {"m", r.m}, {"connected", true}}},
      {"twins",
       {{"false_classes", r.false_twins},
        {"true_classes", r.true_twins},
        {"universal", r.universal}}},
      {"chordal", r.chordal},
      {"witness_cycle", r.witness_cycle},
      {"strictly_chordal", r.strictly_chordal},
      {"cliques", r.cliques},
      {"separators", r.separators},
      {"boundary_families", r.families},
      {"structural_spectrum",
       {{"partial", r.partial}, {"entries", r.entries}, {"condensed", r.condensed}}},
  };
  return j.dump(indent) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != AnalysisReport::kSchema) {
      throw std::invalid_argument("unsupported report schema");
    }
    AnalysisReport r;
    j.at("graph").at("n").get_to(r.n);
    j.at("graph").at("m").get_to(r.m);
    j.at("twins").at("false_classes").get_to(r.false_twins);
    j.at("twins").at("true_classes").get_to(r.true_twins);
    j.at("twins").at("universal").get_to(r.universal);
    j.at("chordal").get_to(r.chordal);
    j.at("witness_cycle").get_to(r.witness_cycle);
    j.at("strictly_chordal").get_to(r.strictly_chordal);
    j.at("cliques").get_to(r.cliques);
    j.at("separators").get_to(r.separators);
    j.at("boundary_families").get_to(r.families);
    const auto& s = j.at("structural_spectrum");
    s.at("partial").get_to(r.partial);
    s.at("entries").get_to(r.entries);
    s.at("condensed").get_to(r.condensed);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace intlap
