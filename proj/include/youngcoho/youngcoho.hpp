#pragma once

#include "cli.hpp"
#include "closed_forms_p2.hpp"
#include "cohomology.hpp"
#include "dyer_lashof.hpp"
#include "errors.hpp"
#include "gl_characters.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "schur_data.hpp"
#include "sym_characters.hpp"
