#pragma once

#include "wedgecrys/error.hpp"
#include "wedgecrys/finite_field.hpp"
#include "wedgecrys/integers.hpp"
#include "wedgecrys/local_test_ring.hpp"
#include "wedgecrys/modulus_ring.hpp"
#include "wedgecrys/random.hpp"
#include "wedgecrys/ring_concepts.hpp"
#include "wedgecrys/valuation.hpp"
#include "wedgecrys/witt_ring.hpp"

namespace wedgecrys {

static_assert(CommutativeRing<IntegerRing> && !LocalRing<IntegerRing>);
static_assert(Field<Rationals>);
static_assert(Field<FiniteField>);
static_assert(ChainRing<ModulusRing> && !Field<ModulusRing>);
static_assert(ChainRing<WittRing>);
static_assert(ChainRing<LocalTestRing>);

}  // namespace wedgecrys
