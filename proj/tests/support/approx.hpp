#pragma once

#include <cmath>

#include <doctest.h>

// Absolute-tolerance check; doctest's Approx only scales relatively.
#define CHECK_ABS(lhs, rhs, tol)                                            \
  do {                                                                      \
    const double check_abs_l = (lhs);                                       \
    const double check_abs_r = (rhs);                                       \
    const double check_abs_t = (tol);                                       \
    INFO("|" << check_abs_l << " - " << check_abs_r                         \
             << "| = " << std::abs(check_abs_l - check_abs_r) << ", tol "   \
             << check_abs_t);                                               \
    CHECK(std::abs(check_abs_l - check_abs_r) <= check_abs_t);              \
  } while (0)
