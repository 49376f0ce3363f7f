#include "ader/reconstruction.hpp"

namespace ader {

CellPolynomial shweno_cell(const HermiteStencil& s, const WeightConfig& cfg) {
  const Quartic big = build_hermite_quartic(s);
  const double sl = s.wbar[1] - s.wbar[0];
  const double sr = s.wbar[2] - s.wbar[1];
  const ShwenoMix mix = shweno_weights(big, sl, sr, cfg);
  return CellPolynomial{shweno_combine(big, s.wbar[1], sl, sr, mix), s.dx};
}

}  // namespace ader
