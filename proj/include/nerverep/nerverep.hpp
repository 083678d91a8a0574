#pragma once

#include "rational.hpp"
#include "simplicial_complex.hpp"
#include "linear_program.hpp"
#include "convex.hpp"
#include "nerve.hpp"
#include "wegner_map.hpp"
#include "gf2.hpp"
#include "vk_obstruction.hpp"
#include "serialization.hpp"
#include "certificate.hpp"
#include "pipeline.hpp"
