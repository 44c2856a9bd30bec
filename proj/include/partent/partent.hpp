#pragma once

// Umbrella header.

#include "partent/algebra.hpp"
#include "partent/decomposition.hpp"
#include "partent/entropy.hpp"
#include "partent/error.hpp"
#include "partent/json_io.hpp"
#include "partent/mset.hpp"
#include "partent/random.hpp"
#include "partent/rational.hpp"
#include "partent/step_measure.hpp"
#include "partent/transport.hpp"
