// SPDX-License-Identifier: Apache-2.0
//
// ris-pathid: RIS-assisted path identification toolkit
// Copyright (C) 2026 The ris-pathid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <rispath/scene.hpp>
#include <rispath/scene_io.hpp>
#include <rispath/channel.hpp>
#include <rispath/random.hpp>
#include <rispath/patterns.hpp>
#include <rispath/ncx2.hpp>
#include <rispath/stats.hpp>
#include <rispath/detector.hpp>
#include <rispath/parallel.hpp>
#include <rispath/montecarlo.hpp>
#include <rispath/experiments.hpp>
