#pragma once

#include "ddvv/curvature.hpp"
#include "ddvv/inequalities.hpp"
#include "ddvv/io.hpp"
#include "ddvv/lemmas.hpp"
#include "ddvv/rng.hpp"
#include "ddvv/search.hpp"
#include "ddvv/sym_matrix.hpp"
#include "ddvv/symmetry.hpp"
