// Copyright 2026 The dipnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIPNET_ERRORS_H
#define DIPNET_ERRORS_H

#include <stdexcept>
#include <string>

namespace dipnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};
struct NotPositive : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct BadSubsystem : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct ZeroProbability : Error {
    using Error::Error;
};
struct OracleMismatch : Error {
    using Error::Error;
};

}  // namespace dipnet

#endif
