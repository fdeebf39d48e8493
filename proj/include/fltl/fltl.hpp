#pragma once

#include "fltl/analysis.hpp"
#include "fltl/bench.hpp"
#include "fltl/boolean.hpp"
#include "fltl/export.hpp"
#include "fltl/formula.hpp"
#include "fltl/generate.hpp"
#include "fltl/normal_form.hpp"
#include "fltl/parse.hpp"
#include "fltl/pnf.hpp"
#include "fltl/print.hpp"
#include "fltl/semantics.hpp"
#include "fltl/tableau.hpp"
#include "fltl/trace.hpp"
