#pragma once

#include "ugg/acceptance.hpp"
#include "ugg/audit.hpp"
#include "ugg/btree.hpp"
#include "ugg/convex.hpp"
#include "ugg/crossing_iso.hpp"
#include "ugg/embedder.hpp"
#include "ugg/embedding.hpp"
#include "ugg/enumerate.hpp"
#include "ugg/error.hpp"
#include "ugg/geometry.hpp"
#include "ugg/io.hpp"
#include "ugg/svg.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"
#include "ugg/validate.hpp"
