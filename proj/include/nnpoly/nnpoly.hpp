#pragma once

#include "base_a.hpp"
#include "bigint.hpp"
#include "config.hpp"
#include "error.hpp"
#include "fourier_motzkin.hpp"
#include "int_factor.hpp"
#include "invariants.hpp"
#include "nn_factor.hpp"
#include "poly.hpp"
#include "poset.hpp"
#include "primes_ideals.hpp"
#include "text.hpp"
#include "weyl.hpp"
#include "zx_factor.hpp"
