#pragma once

#include "rational.hpp"
#include "permutation.hpp"
#include "weight.hpp"
#include "parabolic.hpp"
#include "dihedral.hpp"
#include "model.hpp"
#include "tableau.hpp"
#include "kl.hpp"
#include "gk.hpp"
#include "varieties.hpp"
