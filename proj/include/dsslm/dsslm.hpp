#pragma once

// Umbrella header: OFDM PAPR reduction with Class III selected mapping and
// deterministic cyclic-shift selection.

#include "dsslm/ccdf_io.hpp"
#include "dsslm/class3.hpp"
#include "dsslm/constellation.hpp"
#include "dsslm/correlation.hpp"
#include "dsslm/error.hpp"
#include "dsslm/fft.hpp"
#include "dsslm/harness.hpp"
#include "dsslm/oversample.hpp"
#include "dsslm/papr.hpp"
#include "dsslm/profile.hpp"
#include "dsslm/profile_io.hpp"
#include "dsslm/rng.hpp"
#include "dsslm/selection.hpp"
#include "dsslm/sequence.hpp"
