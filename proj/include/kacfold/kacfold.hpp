#pragma once

#include "kacfold/cartan.hpp"
#include "kacfold/enumerator.hpp"
#include "kacfold/error.hpp"
#include "kacfold/field.hpp"
#include "kacfold/fixtures.hpp"
#include "kacfold/io.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/matrix.hpp"
#include "kacfold/quiver.hpp"
#include "kacfold/representation.hpp"
#include "kacfold/roots.hpp"
#include "kacfold/skew.hpp"
