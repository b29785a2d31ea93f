#pragma once

#include <stdexcept>
#include <string>

namespace aq {

// Base for every error raised by the library. The class name is the error kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquare : public Error { public: using Error::Error; };
class Singular : public Error { public: using Error::Error; };
class ContextMismatch : public Error { public: using Error::Error; };
class SideMismatch : public Error { public: using Error::Error; };
class ZeroElement : public Error { public: using Error::Error; };
class NonInvertibleLead : public Error { public: using Error::Error; };
class SpectralCollision : public Error { public: using Error::Error; };
class SingularY : public Error { public: using Error::Error; };
class RankConditionFailed : public Error { public: using Error::Error; };
class RankNotOne : public Error { public: using Error::Error; };
class ValidationFailed : public Error { public: using Error::Error; };
class SaturationBoundExceeded : public Error { public: using Error::Error; };
class BadDeterminant : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };
class InvalidParameter : public Error { public: using Error::Error; };

}  // namespace aq
