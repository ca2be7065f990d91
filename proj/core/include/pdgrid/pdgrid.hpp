#pragma once

#include "pdgrid/error.hpp"
#include "pdgrid/generate.hpp"
#include "pdgrid/geometry.hpp"
#include "pdgrid/labeling.hpp"
#include "pdgrid/pipeline.hpp"
#include "pdgrid/placement.hpp"
#include "pdgrid/planar_graph.hpp"
#include "pdgrid/quad_graph.hpp"
#include "pdgrid/render.hpp"
#include "pdgrid/report.hpp"
#include "pdgrid/verify.hpp"
