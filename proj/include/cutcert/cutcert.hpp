#pragma once

// Umbrella header.

#include "cutcert/alexander.hpp"
#include "cutcert/bigint.hpp"
#include "cutcert/error.hpp"
#include "cutcert/group_ring.hpp"
#include "cutcert/harvey.hpp"
#include "cutcert/intlinalg.hpp"
#include "cutcert/jet.hpp"
#include "cutcert/laurent.hpp"
#include "cutcert/magnus.hpp"
#include "cutcert/magnus_series.hpp"
#include "cutcert/nilpotent.hpp"
#include "cutcert/poly_matrix.hpp"
#include "cutcert/presentation.hpp"
#include "cutcert/version.hpp"
#include "cutcert/word.hpp"
#include "cutcert/word_parse.hpp"
