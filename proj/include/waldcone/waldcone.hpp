#pragma once

#include "waldcone/classes.hpp"
#include "waldcone/cone.hpp"
#include "waldcone/config.hpp"
#include "waldcone/dp4catalog.hpp"
#include "waldcone/errors.hpp"
#include "waldcone/io.hpp"
#include "waldcone/lattice.hpp"
#include "waldcone/monomial.hpp"
#include "waldcone/rational.hpp"
#include "waldcone/simplex.hpp"
