#pragma once

// Umbrella header.

#include "iprng/analyzer.hpp"
#include "iprng/census.hpp"
#include "iprng/charpoly.hpp"
#include "iprng/error.hpp"
#include "iprng/generator.hpp"
#include "iprng/histogram.hpp"
#include "iprng/number_theory.hpp"
#include "iprng/report_io.hpp"
#include "iprng/ring_gr2.hpp"
#include "iprng/ring_zpe.hpp"
