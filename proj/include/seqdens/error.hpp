#pragma once

#include <stdexcept>
#include <string>

namespace seqdens {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (sequence files, rational literals, CSV).
class ParseError : public Error {
public:
  using Error::Error;
};

// A sequence with no motif points.
class EmptyMotifError : public Error {
public:
  using Error::Error;
};

// Initial intervals intersect with positive measure (a negative gap).
class OverlapError : public Error {
public:
  using Error::Error;
};

}  // namespace seqdens
