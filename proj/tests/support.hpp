#pragma once

// Oracles plus GoogleTest helpers for the unit suites.

#include "oracles.hpp"

#include <gtest/gtest.h>

#include "frob/error.hpp"

/// Expects stmt to throw frob::Error of the given kind.
#define EXPECT_FROB_ERROR(stmt, errorKind)                                              \
  do {                                                                                  \
    try {                                                                               \
      (void)(stmt);                                                                     \
      ADD_FAILURE() << "expected " << frob::errorName(errorKind) << " from " #stmt;     \
    } catch (const frob::Error& err_) {                                                 \
      EXPECT_EQ(err_.kind(), errorKind) << err_.what();                                 \
    }                                                                                   \
  } while (false)
