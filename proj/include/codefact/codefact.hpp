#pragma once

#include "codefact/codes.hpp"
#include "codefact/construct.hpp"
#include "codefact/cyclic.hpp"
#include "codefact/errors.hpp"
#include "codefact/exppoly.hpp"
#include "codefact/factorization.hpp"
#include "codefact/integers.hpp"
#include "codefact/ncpoly.hpp"
#include "codefact/word.hpp"
