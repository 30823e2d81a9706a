#pragma once

#include "menger/error.hpp"
#include "menger/algebra.hpp"
#include "menger/term.hpp"
#include "menger/relations.hpp"
#include "menger/principal.hpp"
#include "menger/parallel.hpp"
#include "menger/enumerate.hpp"
#include "menger/corpus.hpp"
#include "menger/suite.hpp"
#include "menger/io.hpp"
