#pragma once

// Umbrella header.

#include "ncalg/error.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/matrix.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/expr.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/quaternion.hpp"
#include "ncalg/roots.hpp"
#include "ncalg/rep.hpp"
#include "ncalg/hopf.hpp"
#include "ncalg/io.hpp"
