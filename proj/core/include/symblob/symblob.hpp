#pragma once

#include "symblob/blobs.hpp"
#include "symblob/errors.hpp"
#include "symblob/gaussian_states.hpp"
#include "symblob/matcore.hpp"
#include "symblob/matrix.hpp"
#include "symblob/rng.hpp"
#include "symblob/sympcore.hpp"
#include "symblob/tolerances.hpp"
#include "symblob/version.hpp"
#include "symblob/williamson.hpp"
