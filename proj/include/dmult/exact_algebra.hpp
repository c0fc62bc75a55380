#pragma once

#include "dmult/affine_weyl.hpp"
#include "dmult/laurent.hpp"
#include "dmult/ratqt.hpp"
#include "dmult/weight_series.hpp"

namespace dmult {

using CharSeries = WeightSeries<long>;
using LaurentSeries = WeightSeries<LaurentT>;
using RatSeries = WeightSeries<RatQT>;

// e^mu -> e^{w(mu)}, extended linearly.
template <class S>
WeightSeries<S> weyl_substitute(const FiniteWeylElt& w, const WeightSeries<S>& f) {
  return f.substitute([&](const Weight& mu) { return w(mu); });
}

}  // namespace dmult
