#pragma once

#include "flagvec/cdindex.hpp"
#include "flagvec/corpus.hpp"
#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/families.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/flagalg.hpp"
#include "flagvec/forms.hpp"
#include "flagvec/io.hpp"
#include "flagvec/lattice.hpp"
#include "flagvec/rank_set.hpp"
#include "flagvec/verify.hpp"
