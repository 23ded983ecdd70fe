#pragma once

#include "mfnps/errors.hpp"
#include "mfnps/hamiltonian.hpp"
#include "mfnps/oracle.hpp"
#include "mfnps/series.hpp"
#include "mfnps/solver.hpp"
#include "mfnps/splitparams.hpp"
#include "mfnps/tables.hpp"
