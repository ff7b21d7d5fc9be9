// Umbrella header: exact computations with monomial ideals — integral
// closures of powers, rational powers, binomial expansions over disjoint
// variable sets, and depth/regularity via graded Betti numbers.

#pragma once

#include "rp/rational.hpp"
#include "rp/error.hpp"
#include "rp/context.hpp"
#include "rp/ideal.hpp"
#include "rp/linalg.hpp"
#include "rp/lp.hpp"
#include "rp/fourier_motzkin.hpp"
#include "rp/closure.hpp"
#include "rp/expansion.hpp"
#include "rp/squarefree.hpp"
#include "rp/betti.hpp"
#include "rp/splitting.hpp"
#include "rp/io.hpp"
