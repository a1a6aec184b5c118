#pragma once

#include "paley/character.hpp"
#include "paley/clique.hpp"
#include "paley/export.hpp"
#include "paley/gaussian.hpp"
#include "paley/graph.hpp"
#include "paley/residue.hpp"
#include "paley/verify.hpp"
