#pragma once

#include <doctest.h>

#include <string>

#include "wonder/util.hpp"

// Runs f, which must throw WonderError with the given code; returns the
// witness carried by the error.
template <typename F>
std::string expect_err(wonder::Err want, F&& f) {
  try {
    f();
  } catch (const wonder::WonderError& e) {
    CHECK(wonder::err_name(e.code) == doctest::String(wonder::err_name(want)));
    return e.witness;
  }
  FAIL_CHECK("expected error " << wonder::err_name(want)
                               << " but nothing was thrown");
  return "";
}
