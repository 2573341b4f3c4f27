#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

// One exception type per failure mode surfaced by the library.

struct ZeroToNegativePower : std::domain_error {
  ZeroToNegativePower()
      : std::domain_error("cannot raise 0 to a negative power") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct CompositeModulus : std::invalid_argument {
  explicit CompositeModulus(const std::string& what)
      : std::invalid_argument(what) {}
};

struct BadPrime : std::invalid_argument {
  explicit BadPrime(const std::string& what) : std::invalid_argument(what) {}
};

// The image of X^{k-2}{0,oo} fails to span a complement of the cuspidal
// subspace; should not occur for p > k.
struct BoundaryDegenerate : std::runtime_error {
  explicit BoundaryDegenerate(const std::string& what)
      : std::runtime_error(what) {}
};

// The Eisenstein dual eigenspace came out zero-dimensional.
struct NoEisensteinCongruence : std::runtime_error {
  explicit NoEisensteinCongruence(const std::string& what)
      : std::runtime_error(what) {}
};

// The Eisenstein dual eigenspace has dimension >= 2; the caller reports
// the pair indeterminate instead of picking a line arbitrarily.
struct MultiplicityFailure : std::runtime_error {
  explicit MultiplicityFailure(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotIrregular : std::invalid_argument {
  explicit NotIrregular(const std::string& what)
      : std::invalid_argument(what) {}
};

struct EvenIndex : std::invalid_argument {
  explicit EvenIndex(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownFormat : std::invalid_argument {
  explicit UnknownFormat(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace ladder
