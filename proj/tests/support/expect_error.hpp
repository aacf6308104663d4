// Copyright 2026 The gcsg Authors
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

#ifndef GCSG_TESTS_SUPPORT_EXPECT_ERROR_HPP_
#define GCSG_TESTS_SUPPORT_EXPECT_ERROR_HPP_

#include <gtest/gtest.h>

#include <functional>

#include "gcsg/error.hpp"

namespace gcsg::testing {

// Code of the gcsg::Error thrown by `f`; records a failure if none is.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

}  // namespace gcsg::testing

#endif  // GCSG_TESTS_SUPPORT_EXPECT_ERROR_HPP_
