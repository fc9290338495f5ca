#pragma once

#include "detinv/betti.hpp"
#include "detinv/homology.hpp"
#include "detinv/ideal.hpp"
#include "detinv/loccoh.hpp"
#include "detinv/numeric.hpp"
#include "detinv/partition.hpp"
#include "detinv/qpolynomial.hpp"
#include "detinv/schur.hpp"
#include "detinv/weights.hpp"
