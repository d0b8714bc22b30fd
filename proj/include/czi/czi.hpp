#pragma once

#include "checked.hpp"
#include "coloring.hpp"
#include "corpus.hpp"
#include "families.hpp"
#include "family_table.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "stability.hpp"
#include "verify.hpp"
