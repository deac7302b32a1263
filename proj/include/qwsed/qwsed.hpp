#pragma once

// Vertex sedentariness in continuous-time quantum walks: certificates,
// graph constructions, closed-form oracles and a numeric infimum scanner.

#include "qwsed/arithmetic.hpp"
#include "qwsed/certificates.hpp"
#include "qwsed/classify.hpp"
#include "qwsed/error.hpp"
#include "qwsed/families.hpp"
#include "qwsed/graph.hpp"
#include "qwsed/io.hpp"
#include "qwsed/operators.hpp"
#include "qwsed/oracles.hpp"
#include "qwsed/periodicity.hpp"
#include "qwsed/reproduce.hpp"
#include "qwsed/scan.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/structure.hpp"
