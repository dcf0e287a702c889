#pragma once

#include "pwlab/bounds.hpp"
#include "pwlab/cone.hpp"
#include "pwlab/constructions.hpp"
#include "pwlab/cyclic.hpp"
#include "pwlab/gf2.hpp"
#include "pwlab/gf2poly.hpp"
#include "pwlab/io.hpp"
#include "pwlab/search.hpp"
#include "pwlab/weights.hpp"
