#include "ft/glimm.hpp"

#include <cmath>

namespace ft {

double weighted_strength(const ProtoFront& f, const GlimmConfig& cfg) {
  if (f.family == 2) return std::fabs(f.strength) + std::fabs(f.strength2);
  const double w = (f.family == 1) ? cfg.kplus : 1.0;
  return w * std::fabs(f.strength);
}

namespace {

// Lower front of family i approaches upper front of family j iff i > j, or
// they share a GNL family and at least one is a shock. Contacts never
// approach each other.
bool approaching(const ProtoFront& lower, const ProtoFront& upper) {
  if (lower.family > upper.family) return true;
  if (lower.family == upper.family && lower.family != 2)
    return lower.kind == FrontKind::shock || upper.kind == FrontKind::shock;
  return false;
}

}  // namespace

void functional(const std::vector<ProtoFront>& fronts, const GlimmConfig& cfg,
                double& V, double& Q, double& G) {
  V = Q = 0.0;
  std::vector<double> b(fronts.size());
  for (size_t i = 0; i < fronts.size(); ++i) {
    b[i] = weighted_strength(fronts[i], cfg);
    V += b[i];
  }
  for (size_t i = 0; i < fronts.size(); ++i)
    for (size_t j = i + 1; j < fronts.size(); ++j)
      if (approaching(fronts[i], fronts[j])) Q += b[i] * b[j];
  G = V + cfg.kappa * Q;
}

void record(GlimmHistory& hist, double x,
            const std::vector<ProtoFront>& fronts,
            const std::string& event_kind, double incoming_product,
            const GlimmConfig& cfg) {
  GlimmRecord rec;
  rec.x = x;
  rec.event_kind = event_kind;
  functional(fronts, cfg, rec.V, rec.Q, rec.G);
  if (!hist.records.empty() && event_kind != "initial") {
    const GlimmRecord& prev = hist.records.back();
    const double tol = 1e-12 * std::max(1.0, prev.G);
    if (rec.G > prev.G + tol) {
      rec.flagged = true;
      rec.flag_reason = "G increased";
    }
    if (event_kind == "collision" && incoming_product > 0.0) {
      const double slack = 1e-12 * std::max(1.0, prev.Q);
      if (rec.Q - prev.Q > -0.25 * incoming_product + slack) {
        rec.flagged = true;
        if (!rec.flag_reason.empty()) rec.flag_reason += "; ";
        rec.flag_reason += "Q drop below quarter product";
      }
    }
  }
  hist.any_flagged = hist.any_flagged || rec.flagged;
  hist.records.push_back(rec);
}

double measure_max_k2(const GasState& center, double eps, const GasModel& m) {
  double k2max = 0.0;
  const int n = 8;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      GasState s = center;
      s.u += eps * i / n;
      s.v += eps * j / n;
      if (!is_supersonic_x(s, m)) continue;
      k2max = std::max(k2max, std::fabs(reflection_coefficient(s, m)));
    }
  }
  return k2max;
}

}  // namespace ft
