// Umbrella header.

#ifndef OCCULT_OCCULT_HPP_
#define OCCULT_OCCULT_HPP_

#include "arith.hpp"
#include "catalog.hpp"
#include "config.hpp"
#include "discriminant.hpp"
#include "embedding.hpp"
#include "enumeration.hpp"
#include "expression.hpp"
#include "isometry.hpp"
#include "lattice.hpp"
#include "lattice_io.hpp"
#include "matrix.hpp"
#include "normal_forms.hpp"
#include "report.hpp"
#include "suite.hpp"

#endif  // OCCULT_OCCULT_HPP_
