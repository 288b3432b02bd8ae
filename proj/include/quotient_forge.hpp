#pragma once

#include "quotient_forge/errors.hpp"
#include "quotient_forge/cyclic_arith.hpp"
#include "quotient_forge/integer_matrix.hpp"
#include "quotient_forge/toric_geometry.hpp"
#include "quotient_forge/quiver.hpp"
#include "quotient_forge/sections.hpp"
#include "quotient_forge/mckay_quiver.hpp"
#include "quotient_forge/special_quiver.hpp"
#include "quotient_forge/groebner.hpp"
#include "quotient_forge/lattice_ideals.hpp"
#include "quotient_forge/report.hpp"
#include "quotient_forge/moduli_verify.hpp"
#include "quotient_forge/properties.hpp"
#include "quotient_forge/io.hpp"
#include "quotient_forge/cli.hpp"
