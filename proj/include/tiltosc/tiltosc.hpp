#ifndef TILTOSC_TILTOSC_HPP
#define TILTOSC_TILTOSC_HPP

#include "tiltosc/fock.hpp"
#include "tiltosc/algebra.hpp"
#include "tiltosc/coherent.hpp"
#include "tiltosc/similarity.hpp"
#include "tiltosc/laguerre.hpp"
#include "tiltosc/hamiltonian.hpp"
#include "tiltosc/statistics.hpp"
#include "tiltosc/verify.hpp"
#include "tiltosc/sweep.hpp"

#endif  // TILTOSC_TILTOSC_HPP
