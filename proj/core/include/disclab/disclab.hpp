#pragma once

#include "disclab/arith.hpp"
#include "disclab/discriminator.hpp"
#include "disclab/error.hpp"
#include "disclab/primes.hpp"
#include "disclab/quad_seq.hpp"
#include "disclab/residue_set.hpp"
#include "disclab/witness/general.hpp"
#include "disclab/witness/p2.hpp"
#include "disclab/witness/p3.hpp"
#include "disclab/witness/types.hpp"
