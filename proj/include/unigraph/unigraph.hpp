#pragma once

// Umbrella header: finite valuation ring arithmetic, characters, Gauss and
// Eisenstein sums, unimodular and Platonic graphs, spectra, and the
// verification drivers.

#include "acceptance.hpp"
#include "applications.hpp"
#include "char_sums.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "spectral.hpp"
#include "unit_group.hpp"
