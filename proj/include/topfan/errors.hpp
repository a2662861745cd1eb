#pragma once

#include <stdexcept>
#include <string>

namespace topfan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};
class NotAFacet : public Error {
 public:
  using Error::Error;
};
class BadParameters : public Error {
 public:
  using Error::Error;
};
class InvalidComplex : public Error {
 public:
  using Error::Error;
};
class InvalidFan : public Error {
 public:
  using Error::Error;
};
class LengthMismatch : public Error {
 public:
  using Error::Error;
};
class SingularB : public Error {
 public:
  using Error::Error;
};
class NonUnimodularV : public Error {
 public:
  using Error::Error;
};
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};
class DegenerateDirection : public Error {
 public:
  using Error::Error;
};
class DisconnectedDualGraph : public Error {
 public:
  using Error::Error;
};
class NoColoringFound : public Error {
 public:
  using Error::Error;
};
class NotStarShaped : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace topfan
