#pragma once

// Everything except report.hpp, which additionally needs nlohmann/json.

#include "analysis.hpp"
#include "cache.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "corpus.hpp"
#include "element_set.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "pure_spectrum.hpp"
#include "purity.hpp"
#include "ring.hpp"
#include "spectra.hpp"
#include "symz.hpp"
#include "topology.hpp"
#include "verify.hpp"
