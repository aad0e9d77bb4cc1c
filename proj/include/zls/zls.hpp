#pragma once

#include "zls/compactness.hpp"
#include "zls/homlift.hpp"
#include "zls/json_io.hpp"
#include "zls/lattice.hpp"
#include "zls/matrix.hpp"
#include "zls/normal_form.hpp"
#include "zls/presentation.hpp"
#include "zls/solver.hpp"
#include "zls/system.hpp"
