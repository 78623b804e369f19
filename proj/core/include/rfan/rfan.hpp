// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rfan/certificate.hpp"
#include "rfan/cone.hpp"
#include "rfan/document.hpp"
#include "rfan/fan.hpp"
#include "rfan/groebner.hpp"
#include "rfan/io.hpp"
#include "rfan/lp.hpp"
#include "rfan/polynomial.hpp"
#include "rfan/polytope.hpp"
#include "rfan/rational.hpp"
#include "rfan/regularity.hpp"
#include "rfan/term_order.hpp"
