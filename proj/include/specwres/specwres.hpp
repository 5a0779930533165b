#pragma once

#include "specwres/numerics.hpp"
#include "specwres/tensor.hpp"
#include "specwres/clifford.hpp"
#include "specwres/jets.hpp"
#include "specwres/operators.hpp"
#include "specwres/symbol.hpp"
#include "specwres/wres_engine.hpp"
#include "specwres/functionals.hpp"
#include "specwres/scenario.hpp"
#include "specwres/checks.hpp"
