#pragma once

#include "stemlie/algebra.hpp"

namespace stemlie {

// exp(t ad X_{gamma_k}(rho)) for t = quarter * pi/2, quarter in {1, 2, -1}.
// Assembled from closed forms: root strings rotate inside their (<= 4
// dimensional) irreducible ad sl2(2)-blocks, the Cartan part moves by
// H -> H + i gamma(H)(sin t Y + (1 - cos t) W), and E_{+-gamma} follow the
// stem sl2 itself. All matrix entries stay inside K at quarter turns.
LinOp exp_ad_stem_factor(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                         int k, int quarter);

// c = exp((pi/2) ad X_Gamma): the square root of the opposition involution.
LinOp cayley_transform(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame);
LinOp cayley_transform_inverse(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame);

// phi = exp(pi ad X_Gamma): maps Delta+ to Delta- and fixes o pointwise
// on the Cartan side via H - sum gamma(H) H_gamma.
LinOp opposition_involution(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame);

} // namespace stemlie
