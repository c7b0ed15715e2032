#pragma once

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/io.hpp"
#include "sysres/matrix.hpp"
#include "sysres/monomial.hpp"
#include "sysres/multipliers.hpp"
#include "sysres/oracle.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"
#include "sysres/resultant.hpp"
#include "sysres/resultant_system.hpp"
#include "sysres/solvability.hpp"
