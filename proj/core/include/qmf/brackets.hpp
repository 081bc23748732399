#pragma once

#include "qmf/qseries.hpp"

namespace qmf {

/// m-th Rankin-Cohen bracket at level 1:
///
///   [g, h]_m = sum_{r+s=m} (-1)^r C(m+k1-1, s) C(m+k2-1, r) D^r g D^s h
///
/// with k1, k2 the weights of g and h. The result has weight k1 + k2 + 2m
/// and precision min(g.prec, h.prec).
GradedSeries rankin_cohen(const GradedSeries& g, const GradedSeries& h, unsigned m);

} // namespace qmf
