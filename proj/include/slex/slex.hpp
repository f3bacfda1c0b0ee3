#pragma once

// Umbrella header: spectral solver for the square-root (quasi-relativistic)
// oscillator via the shifted-l expansion, with rational resummation and an
// independent Numerov integration oracle.

#include "slex/benchmark.hpp"
#include "slex/context.hpp"
#include "slex/energy.hpp"
#include "slex/errors.hpp"
#include "slex/oracle.hpp"
#include "slex/pade.hpp"
#include "slex/potential.hpp"
#include "slex/recursion.hpp"
#include "slex/series.hpp"
