#ifndef DYADIC_DYADIC_HPP
#define DYADIC_DYADIC_HPP

#include "dyadic/adjacency.hpp"
#include "dyadic/digit_sequence.hpp"
#include "dyadic/expansion.hpp"
#include "dyadic/far.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/mei_cover.hpp"
#include "dyadic/rational.hpp"

#endif // DYADIC_DYADIC_HPP
