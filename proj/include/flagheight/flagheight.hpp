#pragma once

#include "bundles.hpp"
#include "finite_field.hpp"
#include "flag_heights.hpp"
#include "gln_bridge.hpp"
#include "linalg.hpp"
#include "point_oracle.hpp"
#include "poly.hpp"
#include "random_inputs.hpp"
#include "rational.hpp"
#include "root_datum.hpp"
#include "verify.hpp"
#include "weyl.hpp"
