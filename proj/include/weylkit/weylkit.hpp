#pragma once

#include "algebra.hpp"
#include "coefficient.hpp"
#include "diagrams.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "gf.hpp"
#include "numeric.hpp"
#include "paths.hpp"
#include "series.hpp"
#include "weyl.hpp"
