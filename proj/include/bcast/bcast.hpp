#pragma once

#include "bcast/audit.hpp"
#include "bcast/closed_forms.hpp"
#include "bcast/constructors.hpp"
#include "bcast/dispatch.hpp"
#include "bcast/error.hpp"
#include "bcast/exact_solver.hpp"
#include "bcast/graph.hpp"
#include "bcast/json_io.hpp"
#include "bcast/reception.hpp"
#include "bcast/render.hpp"
