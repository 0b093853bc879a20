// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include "lmp/rational.hpp"
#include "lmp/rootsys.hpp"
#include "lmp/weyl.hpp"
#include "lmp/vanishing.hpp"
#include "lmp/certificates.hpp"
#include "lmp/verify.hpp"
