// Copyright 2026 The ExtEval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the exteval library.

#ifndef EXTEVAL_EXTEVAL_H_
#define EXTEVAL_EXTEVAL_H_

#include "exteval/annotations.h"
#include "exteval/common.h"
#include "exteval/corpus.h"
#include "exteval/correlation.h"
#include "exteval/csv.h"
#include "exteval/dataset.h"
#include "exteval/injector.h"
#include "exteval/lexicon.h"
#include "exteval/meta_eval.h"
#include "exteval/metric_table.h"
#include "exteval/pipeline.h"
#include "exteval/rouge.h"
#include "exteval/submetrics.h"
#include "exteval/synthetic.h"

#endif  // EXTEVAL_EXTEVAL_H_
