#pragma once

// Exact stable commutator length in Baumslag-Solitar groups: everything.

#include "encoding.hpp"
#include "extremal.hpp"
#include "formulas.hpp"
#include "jsonio.hpp"
#include "lp.hpp"
#include "rational.hpp"
#include "result.hpp"
#include "solver_block.hpp"
#include "solver_pieces.hpp"
#include "sweep.hpp"
#include "words.hpp"
