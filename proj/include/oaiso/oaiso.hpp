#pragma once

// Umbrella header: designs as counting vectors, the relabel/flip group, the
// moment-induced sublevel filtration and its persistence diagram, Wasserstein
// distances, and the randomized isomorphism check built on top of them.

#include "betti.hpp"
#include "canonical.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "experiment.hpp"
#include "filtration.hpp"
#include "io.hpp"
#include "isocheck.hpp"
#include "metrics.hpp"
#include "persistence.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "transform.hpp"
