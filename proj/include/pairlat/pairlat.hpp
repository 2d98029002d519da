#ifndef PAIRLAT_PAIRLAT_HPP_
#define PAIRLAT_PAIRLAT_HPP_

// Umbrella header: classification of graph correspondences by
// kernel--covariance pairs, their lattice, Katsura dilations, and the exact
// Fock-space matrix engine.

#include "pairlat/dilation.hpp"
#include "pairlat/fock.hpp"
#include "pairlat/graph.hpp"
#include "pairlat/ideal.hpp"
#include "pairlat/io.hpp"
#include "pairlat/lattice.hpp"
#include "pairlat/linalg.hpp"
#include "pairlat/rational.hpp"

#endif  // PAIRLAT_PAIRLAT_HPP_
