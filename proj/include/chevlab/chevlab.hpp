#pragma once

#include "chevgen.hpp"
#include "engine.hpp"
#include "kinds.hpp"
#include "rings.hpp"
#include "rootsys.hpp"
#include "suite.hpp"
#include "theorems.hpp"
#include "workspace.hpp"
