#pragma once

#include "braidburau/error.hpp"
#include "braidburau/rational.hpp"
#include "braidburau/free_word.hpp"
#include "braidburau/cell_complex.hpp"
#include "braidburau/braid.hpp"
#include "braidburau/groupoid_action.hpp"
#include "braidburau/group_ring.hpp"
#include "braidburau/matrix.hpp"
#include "braidburau/labeled_matrix.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/fox.hpp"
#include "braidburau/burau.hpp"
#include "braidburau/polynomial.hpp"
#include "braidburau/linalg.hpp"
#include "braidburau/homology.hpp"
#include "braidburau/local_system.hpp"
#include "braidburau/ybe.hpp"
#include "braidburau/json.hpp"
#include "braidburau/fixtures.hpp"
#include "braidburau/relations.hpp"
