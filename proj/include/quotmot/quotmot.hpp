#pragma once

// Exact generating series of nested punctual quotients on a smooth curve:
// truncated multivariate series over the free ring Z[L, s_1, s_2, ...], a
// fixed-point strata enumeration that recomputes every coefficient
// independently, the exponential reformulation, and the Hodge-Deligne,
// signed Poincare, and Euler specializations with their closed forms.

#include "quotmot/bb_oracle.hpp"
#include "quotmot/bigint.hpp"
#include "quotmot/closed_forms.hpp"
#include "quotmot/config.hpp"
#include "quotmot/errors.hpp"
#include "quotmot/exp.hpp"
#include "quotmot/exponents.hpp"
#include "quotmot/measures.hpp"
#include "quotmot/motive.hpp"
#include "quotmot/nested.hpp"
#include "quotmot/polynomials.hpp"
#include "quotmot/report.hpp"
#include "quotmot/series.hpp"
#include "quotmot/verify.hpp"
#include "quotmot/zeta.hpp"
