#pragma once

#include "artinian/errors.hpp"
#include "artinian/rational.hpp"
#include "artinian/monomial.hpp"
#include "artinian/polynomial.hpp"
#include "artinian/parse.hpp"
#include "artinian/sparse_linalg.hpp"
#include "artinian/local_algebra.hpp"
#include "artinian/jacobian.hpp"
#include "artinian/flat.hpp"
#include "artinian/univariate.hpp"
#include "artinian/interval.hpp"
#include "artinian/groebner.hpp"
#include "artinian/splitting.hpp"
#include "artinian/scenario.hpp"
