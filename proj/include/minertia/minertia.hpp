#pragma once

#include "bounds.hpp"
#include "degree.hpp"
#include "error.hpp"
#include "inertia.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "strata.hpp"
