#pragma once

#include "exactfn/assessment.hpp"
#include "exactfn/choquet.hpp"
#include "exactfn/consistency.hpp"
#include "exactfn/errors.hpp"
#include "exactfn/gamble.hpp"
#include "exactfn/homomorphism.hpp"
#include "exactfn/lp.hpp"
#include "exactfn/monotone.hpp"
#include "exactfn/rational.hpp"
#include "exactfn/verdict.hpp"
