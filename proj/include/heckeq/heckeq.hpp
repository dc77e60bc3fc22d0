#pragma once

#include "heckeq/bigrational.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/idempotents.hpp"
#include "heckeq/json_io.hpp"
#include "heckeq/limits.hpp"
#include "heckeq/permutation.hpp"
#include "heckeq/poly.hpp"
#include "heckeq/qpoly.hpp"
#include "heckeq/qrat.hpp"
#include "heckeq/ratfunc.hpp"
#include "heckeq/scalar_io.hpp"
#include "heckeq/symgroup.hpp"
#include "heckeq/tableaux.hpp"
#include "heckeq/trace.hpp"
