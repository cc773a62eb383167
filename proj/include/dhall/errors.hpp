#pragma once

#include <stdexcept>
#include <string>

namespace dhall {

// Base for every error the library raises. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class ContextMismatch : public InputError {
public:
    using InputError::InputError;
};

class DenominatorVanishes : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class NotHereditary : public InputError {
public:
    using InputError::InputError;
};

class InvalidFoliation : public InputError {
public:
    using InputError::InputError;
};

class NotEnoughMarkedIntervals : public InputError {
public:
    using InputError::InputError;
};

class LoopEdge : public InputError {
public:
    using InputError::InputError;
};

class UnknownGenerator : public InputError {
public:
    using InputError::InputError;
};

class UnassignedGenerator : public InputError {
public:
    using InputError::InputError;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class NotInternal : public InputError {
public:
    using InputError::InputError;
};

class InvalidParams : public InputError {
public:
    using InputError::InputError;
};

class NotImplemented : public Error {
public:
    using Error::Error;
};

}  // namespace dhall
