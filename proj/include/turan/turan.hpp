#pragma once

#include "turan/graph.hpp"
#include "turan/formats.hpp"
#include "turan/clique.hpp"
#include "turan/coloring.hpp"
#include "turan/spectral.hpp"
#include "turan/random.hpp"
#include "turan/simplex.hpp"
#include "turan/bounds.hpp"
#include "turan/certifier.hpp"
#include "turan/enumerator.hpp"
#include "turan/json_io.hpp"
