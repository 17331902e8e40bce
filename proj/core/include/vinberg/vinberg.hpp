#pragma once

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/graded_lie.hpp"
#include "vinberg/hitchin.hpp"
#include "vinberg/invariants.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/poly.hpp"
#include "vinberg/sampling.hpp"
#include "vinberg/scalar.hpp"
#include "vinberg/toledo.hpp"
