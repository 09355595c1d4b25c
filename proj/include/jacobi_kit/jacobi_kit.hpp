#pragma once

// Umbrella header: the exact calculus of Jacobi pairs, contact forms and
// the Spencer operator on the first jet bundle of a trivialized line
// bundle, everything computed over exact multivariate rational functions.

#include "jacobi_kit/symcore/chart.hpp"
#include "jacobi_kit/symcore/errors.hpp"
#include "jacobi_kit/symcore/expr.hpp"
#include "jacobi_kit/symcore/parser.hpp"
#include "jacobi_kit/symcore/polynomial.hpp"
#include "jacobi_kit/symcore/polynomial_gcd.hpp"
#include "jacobi_kit/symcore/random.hpp"
#include "jacobi_kit/symcore/rational.hpp"

#include "jacobi_kit/extcalc/ops.hpp"
#include "jacobi_kit/extcalc/tensor.hpp"

#include "jacobi_kit/jacobi/jacobi_pair.hpp"

#include "jacobi_kit/contact/contact_form.hpp"
#include "jacobi_kit/contact/linsolve.hpp"

#include "jacobi_kit/jetalg/algebroid.hpp"
#include "jacobi_kit/jetalg/jet.hpp"
#include "jacobi_kit/jetalg/spencer_check.hpp"

#include "jacobi_kit/io/report.hpp"
#include "jacobi_kit/io/structure_file.hpp"
