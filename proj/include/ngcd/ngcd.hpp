#pragma once

// Umbrella header: n-way GCD algorithms, step kernels, verification oracles
// and the measurement harness.

#include "ngcd/bench.hpp"
#include "ngcd/counters.hpp"
#include "ngcd/gcd.hpp"
#include "ngcd/natural.hpp"
#include "ngcd/oracle.hpp"
#include "ngcd/rng.hpp"
#include "ngcd/steps.hpp"
#include "ngcd/trace.hpp"
