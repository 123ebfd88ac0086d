#pragma once

#include "korbit/class_engine.hpp"
#include "korbit/cli.hpp"
#include "korbit/closed_orbits.hpp"
#include "korbit/config.hpp"
#include "korbit/degeneracy.hpp"
#include "korbit/errors.hpp"
#include "korbit/io.hpp"
#include "korbit/localization.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/permutation.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/rational.hpp"
#include "korbit/signed_permutation.hpp"
#include "korbit/weak_order.hpp"
#include "korbit/weights.hpp"
