#ifndef MINK_MINK_HPP
#define MINK_MINK_HPP

#include "mink/bodies.hpp"
#include "mink/error.hpp"
#include "mink/functionals.hpp"
#include "mink/lp.hpp"
#include "mink/polytope.hpp"
#include "mink/radii.hpp"
#include "mink/vector.hpp"

#endif  // MINK_MINK_HPP
