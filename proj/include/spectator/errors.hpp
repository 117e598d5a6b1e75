// Copyright 2026 The spectator Authors
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

#ifndef SPECTATOR_ERRORS_HPP
#define SPECTATOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spectator {

/// Base of every error thrown deliberately by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad input: config text, flags, violated preconditions.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Reading or writing files failed.
class IoError : public Error {
   public:
    using Error::Error;
};

/// The numerics ran fine but the requested physical feature is absent.
class PhysicsError : public Error {
   public:
    using Error::Error;
};

class NoResonance : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class NoCancellation : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class TooWeak : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class NothingToCalibrate : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class NotPhaseLike : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class DivergedGate : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class AmbiguousLabel : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

}  // namespace spectator

#endif
