#pragma once

#include "downup/errors.hpp"
#include "downup/scalar.hpp"

#include "downup/freealg/groebner.hpp"
#include "downup/freealg/normal_words.hpp"
#include "downup/freealg/overlap.hpp"
#include "downup/freealg/poly.hpp"
#include "downup/freealg/reduce.hpp"

#include "downup/solvable/algebra.hpp"
#include "downup/solvable/left_ideal.hpp"

#include "downup/gdu/algebra.hpp"
#include "downup/gdu/pbw.hpp"
#include "downup/gdu/presets.hpp"
#include "downup/gdu/to_solvable.hpp"

#include "downup/graded/assoc.hpp"
#include "downup/graded/homogenize.hpp"
#include "downup/graded/monomial.hpp"
#include "downup/graded/series.hpp"
