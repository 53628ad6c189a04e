#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace latstack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NoExtremumError : public Error {
 public:
  using Error::Error;
};

class NotLatticeError : public Error {
 public:
  using Error::Error;
};

class NotMonotoneError : public Error {
 public:
  NotMonotoneError(std::uint32_t x, std::uint32_t y)
      : Error("map is not monotone: " + std::to_string(x) + " <= " + std::to_string(y) +
              " but images are not ordered"),
        violating_pair(x, y) {}

  std::pair<std::uint32_t, std::uint32_t> violating_pair;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class SeriesAxiomError : public Error {
 public:
  using Error::Error;
};

class NotInImageError : public Error {
 public:
  using Error::Error;
};

/// Raised when a construction would exceed the configured element budget.
class SizeError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::string exact_count, std::size_t cap)
      : Error("maximal chain count " + exact_count + " exceeds cap " + std::to_string(cap)),
        count(std::move(exact_count)) {}

  std::string count;  // decimal
};

class NotMaximalError : public Error {
 public:
  using Error::Error;
};

class InvalidWordError : public Error {
 public:
  InvalidWordError(const std::string& what, std::size_t prefix_length)
      : Error(what + " (prefix length " + std::to_string(prefix_length) + ")"),
        prefix_length(prefix_length) {}

  std::size_t prefix_length;
};

class InvalidPartitionError : public Error {
 public:
  using Error::Error;
};

class InvalidWalkError : public Error {
 public:
  using Error::Error;
};

class ChoiceOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error("parse error at '" + field + "': " + what), field(field) {}

  std::string field;
};

}  // namespace latstack
