#pragma once

#include "cstar/blowup.hpp"
#include "cstar/cfrac.hpp"
#include "cstar/cli.hpp"
#include "cstar/equiv.hpp"
#include "cstar/io.hpp"
#include "cstar/quadform.hpp"
#include "cstar/rational.hpp"
#include "cstar/render.hpp"
#include "cstar/stargraph.hpp"
