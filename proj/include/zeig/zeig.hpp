#pragma once

#include "zeig/dense_linalg.hpp"
#include "zeig/enumeration.hpp"
#include "zeig/errors.hpp"
#include "zeig/io.hpp"
#include "zeig/model_tensors.hpp"
#include "zeig/newton_methods.hpp"
#include "zeig/polynomial.hpp"
#include "zeig/power_methods.hpp"
#include "zeig/solve.hpp"
#include "zeig/solver.hpp"
#include "zeig/spectral.hpp"
#include "zeig/symmetric_tensor.hpp"
#include "zeig/tensor_ops.hpp"
