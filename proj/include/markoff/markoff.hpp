#pragma once

#include "cf_core.hpp"
#include "markoff_tree.hpp"
#include "frobenius.hpp"
#include "tsing.hpp"
#include "tcontinuants.hpp"
#include "cantor.hpp"
#include "census.hpp"
