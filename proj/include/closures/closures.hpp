#ifndef CLOSURES_CLOSURES_HPP
#define CLOSURES_CLOSURES_HPP

#include "closures/enumeration.hpp"
#include "closures/framework.hpp"
#include "closures/frobenius.hpp"
#include "closures/grammar.hpp"
#include "closures/groebner.hpp"
#include "closures/instances.hpp"
#include "closures/json_io.hpp"
#include "closures/monomial_ideal.hpp"
#include "closures/newton.hpp"
#include "closures/polyfp.hpp"
#include "closures/rational.hpp"
#include "closures/simplex.hpp"

#endif
