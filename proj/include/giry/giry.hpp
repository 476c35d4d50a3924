#pragma once

#include "acceptance.hpp"
#include "codensity.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "integrate.hpp"
#include "json_io.hpp"
#include "lipmetric.hpp"
#include "lp.hpp"
#include "measure.hpp"
#include "monad.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "represent.hpp"
#include "setalg.hpp"
#include "simplex.hpp"
#include "subset.hpp"
#include "suites.hpp"
