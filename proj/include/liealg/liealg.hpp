#pragma once

#include "liealg/rational.hpp"
#include "liealg/matrix.hpp"
#include "liealg/linalg.hpp"
#include "liealg/polynomial.hpp"
#include "liealg/family.hpp"
#include "liealg/digraph.hpp"
#include "liealg/catalog.hpp"
#include "liealg/roots.hpp"
#include "liealg/forms.hpp"
#include "liealg/weyl.hpp"
#include "liealg/dynkin.hpp"
#include "liealg/invariants.hpp"
