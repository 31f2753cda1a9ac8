#pragma once

#include "wedgecrys/base_change.hpp"
#include "wedgecrys/chain_forms.hpp"
#include "wedgecrys/compound.hpp"
#include "wedgecrys/determinant.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/rank.hpp"
#include "wedgecrys/subsets.hpp"
