#ifndef SHORTLINKS_SHORTLINKS_HPP
#define SHORTLINKS_SHORTLINKS_HPP

#include "shortlinks/common.hpp"
#include "shortlinks/exact_simplex.hpp"
#include "shortlinks/graph.hpp"
#include "shortlinks/isomorphism.hpp"
#include "shortlinks/kp.hpp"
#include "shortlinks/metric.hpp"
#include "shortlinks/partition.hpp"
#include "shortlinks/quadrillage.hpp"
#include "shortlinks/simplicial_complex.hpp"
#include "shortlinks/symmetry.hpp"
#include "shortlinks/text_format.hpp"

#endif  // SHORTLINKS_SHORTLINKS_HPP
