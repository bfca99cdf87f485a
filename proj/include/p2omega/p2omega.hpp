#pragma once

#include "errors.hpp"
#include "gauss_rat.hpp"
#include "half_laurent.hpp"
#include "rat_fun.hpp"
#include "series.hpp"
#include "partitions.hpp"
#include "local_curve.hpp"
#include "gv.hpp"
#include "tree_sum.hpp"
#include "g_functional.hpp"
#include "solver.hpp"
#include "asymptotics.hpp"
#include "refined_hn.hpp"
#include "io.hpp"
