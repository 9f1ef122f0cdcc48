#pragma once

// Umbrella header.
#include "catalog.hpp"
#include "complex.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "error.hpp"
#include "io.hpp"
#include "polytopal.hpp"
#include "recognition.hpp"
#include "simplex.hpp"
