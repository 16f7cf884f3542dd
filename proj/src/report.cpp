#include "ybx/report.hpp"

#include <set>
#include <sstream>

#include "ybx/errors.hpp"
#include "ybx/permbrace.hpp"
#include "ybx/retraction.hpp"
#include "ybx/structbrace.hpp"

namespace ybx {

namespace {

constexpr const char* kInferred =
    "inferred from the multipermutation verdict (equivalent for finite "
    "involutive non-degenerate solutions); not constructed";
constexpr const char* kComputed =
    "computed from the retraction tower, cross-checked against the brace series";

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string group_fingerprint(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "|";
  bool first = true;
  for (const auto& [ord, count] : g.order_profile()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(ord) + ":" + std::to_string(count);
  }
  return out;
}

AnalysisReport analyze(const Solution& s, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.size = s.size();
  r.labels = s.points().labels();
  r.braid = r.involutive = r.nondegenerate = true;

  const MpVerdict tower = mp_level(s);
  r.irretractable = is_irretractable(s);
  r.tower = tower.tower;
  r.multipermutation = tower.is_multipermutation();
  r.mp_level = tower.level;
  r.left_orderable = r.poly_z = r.multipermutation;

  const std::string skipped =
      "skipped: group order exceeds " + std::to_string(options.max_group_order);
  r.group.status = r.socle.status = r.series.status = skipped;
  try {
    BraceOptions bo;
    bo.max_order = options.max_group_order;
    const PermBrace brace = PermBrace::build(s, bo);
    const FiniteGroup& g = brace.group();

    r.group.status = "computed";
    r.group.order = g.order();
    r.group.fingerprint = group_fingerprint(g);
    if (g.order() <= options.max_iso_order) {
      const auto spec = identify_group(g, options.max_iso_order);
      r.group.named = spec ? spec->name() : "none";
    } else {
      r.group.named = "skipped";
    }
    const std::set<Perm> sigma_set(s.sigmas().begin(), s.sigmas().end());
    r.group.equals_sigma_set = sigma_set.size() == g.order();

    const BraceIdeal soc = socle(brace);
    r.socle.status = "computed";
    r.socle.order = soc.order();
    r.socle.trivial = soc.is_trivial();

    const SeriesReport lat = series_lattices(s, options.max_group_order);
    const auto terms = series(brace);
    r.series.status = "computed";
    for (const auto& l : lat.lattices) r.series.lattice_ranks.push_back(l.rank());
    for (const auto& p : lat.perm_images) r.series.perm_orders.push_back(p.order());
    for (const auto& t : terms) r.series.brace_orders.push_back(t.order());
    r.series.stabilization_index = lat.stabilization_index;
    r.series.multipermutation = lat.multipermutation;

    bool same = terms.size() == lat.perm_images.size();
    for (std::size_t m = 0; same && m < terms.size(); ++m)
      same = lat.perm_images[m].same_elements(terms[m].subgroup);
    r.pi_cross_check = same;
    r.verdict_agreement = lat.multipermutation == r.multipermutation;
  } catch (const GroupTooLarge&) {
    r.group = {};
    r.socle = {};
    r.series = {};
    r.group.status = r.socle.status = r.series.status = skipped;
  }
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["size"] = r.size;
  j["labels"] = r.labels;
  j["validity"] = {{"braid", r.braid},
                   {"involutive", r.involutive},
                   {"nondegenerate", r.nondegenerate}};
  j["irretractable"] = r.irretractable;
  j["retraction_tower"] = r.tower;
  j["mp"] = {{"multipermutation", r.multipermutation},
             {"level", r.mp_level ? json(*r.mp_level) : json(nullptr)}};

  json g = {{"status", r.group.status}};
  if (r.group.status == "computed") {
    g["order"] = r.group.order;
    g["fingerprint"] = r.group.fingerprint;
    g["named"] = r.group.named;
    g["equals_sigma_set"] = r.group.equals_sigma_set;
  }
  j["permutation_group"] = g;

  json soc = {{"status", r.socle.status}};
  if (r.socle.status == "computed") {
    soc["order"] = r.socle.order;
    soc["trivial"] = r.socle.trivial;
  }
  j["socle"] = soc;

  json ser = {{"status", r.series.status}};
  if (r.series.status == "computed") {
    ser["lattice_ranks"] = r.series.lattice_ranks;
    ser["perm_orders"] = r.series.perm_orders;
    ser["brace_orders"] = r.series.brace_orders;
    ser["stabilization_index"] = r.series.stabilization_index;
    ser["multipermutation"] = r.series.multipermutation;
  }
  j["series"] = ser;

  j["verdict"] = {{"left_orderable", r.left_orderable}, {"poly_Z", r.poly_z}};
  j["provenance"] = {{"mp", kComputed},
                     {"left_orderable", kInferred},
                     {"poly_Z", kInferred}};

  auto opt = [](const std::optional<bool>& b) {
    return b ? json(*b) : json("skipped");
  };
  j["cross_checks"] = {{"pi_cross_check", opt(r.pi_cross_check)},
                       {"verdict_agreement", opt(r.verdict_agreement)}};
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "points:            " << r.size << " (" << r.labels << ")\n";
  out << "validity:          braid " << yn(r.braid) << ", involutive "
      << yn(r.involutive) << ", non-degenerate " << yn(r.nondegenerate) << '\n';
  out << "irretractable:     " << yn(r.irretractable) << '\n';
  out << "retraction tower:  " << join(r.tower, " -> ") << '\n';
  out << "multipermutation:  ";
  if (r.mp_level)
    out << "yes, level " << *r.mp_level << '\n';
  else
    out << "no\n";

  out << "permutation group: ";
  if (r.group.status == "computed")
    out << "order " << r.group.order << ", fingerprint " << r.group.fingerprint
        << ", named " << r.group.named << ", equals {sigma_x}: "
        << yn(r.group.equals_sigma_set) << '\n';
  else
    out << r.group.status << '\n';

  out << "socle:             ";
  if (r.socle.status == "computed")
    out << "order " << r.socle.order << (r.socle.trivial ? " (trivial)" : "") << '\n';
  else
    out << r.socle.status << '\n';

  out << "series:            ";
  if (r.series.status == "computed")
    out << "ranks of G^(m), m>=2: [" << join(r.series.lattice_ranks, ", ")
        << "]; |P_m|: [" << join(r.series.perm_orders, ", ")
        << "]; stabilizes at m=" << r.series.stabilization_index << '\n';
  else
    out << r.series.status << '\n';

  out << "left orderable:    " << yn(r.left_orderable) << " (inferred)\n";
  out << "poly-Z:            " << yn(r.poly_z) << " (inferred)\n";
  auto opt = [&](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "pass" : "FAIL") : "skipped";
  };
  out << "cross-checks:      pi " << opt(r.pi_cross_check) << ", verdicts "
      << opt(r.verdict_agreement) << '\n';
  return out.str();
}

}  // namespace ybx
