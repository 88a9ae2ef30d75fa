#pragma once

#include "cartan.hpp"
#include "classical.hpp"
#include "element.hpp"
#include "error.hpp"
#include "io.hpp"
#include "kr_crystal.hpp"
#include "letter.hpp"
#include "pm_diagram.hpp"
#include "verify.hpp"
#include "word.hpp"
