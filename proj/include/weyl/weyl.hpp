#pragma once

#include "weyl/error.hpp"
#include "weyl/rational.hpp"
#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"
#include "weyl/factor.hpp"
#include "weyl/graded.hpp"
#include "weyl/homogeneous.hpp"
#include "weyl/parse.hpp"
#include "weyl/format.hpp"
#include "weyl/box.hpp"
#include "weyl/centralizer.hpp"
#include "weyl/dixmier.hpp"
#include "weyl/oracle.hpp"
#include "weyl/verify.hpp"
#include "weyl/report.hpp"
#include "weyl/cli.hpp"
