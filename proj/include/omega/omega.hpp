#pragma once

#include "omega/rational.hpp"
#include "omega/matrix.hpp"
#include "omega/form.hpp"
#include "omega/group.hpp"
#include "omega/liealg.hpp"
#include "omega/poly.hpp"
#include "omega/hamfield.hpp"
#include "omega/flow.hpp"
