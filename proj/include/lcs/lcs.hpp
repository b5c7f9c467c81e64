#pragma once

#include "lcs/baseline.hpp"
#include "lcs/dataset.hpp"
#include "lcs/error.hpp"
#include "lcs/learn.hpp"
#include "lcs/metrics.hpp"
#include "lcs/pattern.hpp"
#include "lcs/random.hpp"
#include "lcs/reconstruct.hpp"
#include "lcs/synthetic.hpp"
#include "lcs/transform.hpp"
