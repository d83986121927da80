#ifndef FT_GLIMM_HPP_
#define FT_GLIMM_HPP_

#include <string>
#include <vector>

#include "ft/riemann.hpp"

namespace ft {

struct GlimmConfig {
  double kappa = 40.0;  // weight of Q in G = V + kappa Q
  double kplus = 2.0;   // family-1 strength weight, must exceed sup |K2|
};

struct GlimmRecord {
  double x = 0.0;
  double V = 0.0, Q = 0.0, G = 0.0;
  std::string event_kind;  // "initial" | "collision" | "reflection"
  bool flagged = false;
  std::string flag_reason;
};

struct GlimmHistory {
  std::vector<GlimmRecord> records;
  bool any_flagged = false;
};

/// Weighted strength |b| of one front: k+ |alpha| for family 1,
/// |alpha2| + |alpha3| for contacts, |alpha| for family 4.
double weighted_strength(const ProtoFront& f, const GlimmConfig& cfg);

/// V = sum of weighted strengths, Q = sum over approaching pairs of
/// |b_a b_b|, G = V + kappa Q. Fronts must be ordered by y (bottom first);
/// the free boundary is not a wave and must not be included.
void functional(const std::vector<ProtoFront>& fronts, const GlimmConfig& cfg,
                double& V, double& Q, double& G);

/// Appends a record; flags it if G increased beyond round-off, or if a
/// collision failed to drop Q by at least a quarter of the incoming product
/// |b_a b_b| (passed by the caller; ignored for other event kinds).
void record(GlimmHistory& hist, double x,
            const std::vector<ProtoFront>& fronts,
            const std::string& event_kind, double incoming_product,
            const GlimmConfig& cfg);

/// Max |K2| over a sampling grid of boundary-adjacent states within the
/// eps-ball around `center` (u, v perturbed; p pinned to center.p).
double measure_max_k2(const GasState& center, double eps, const GasModel& m);

}  // namespace ft

#endif  // FT_GLIMM_HPP_
