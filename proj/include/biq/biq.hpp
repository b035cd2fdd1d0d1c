#pragma once

// Convenience umbrella for the whole library.

#include "biq/axioms.hpp"
#include "biq/core.hpp"
#include "biq/hom.hpp"
#include "biq/io.hpp"
#include "biq/presentation.hpp"
#include "biq/quandle.hpp"
#include "biq/search.hpp"
