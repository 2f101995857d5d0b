#pragma once

#include <stdexcept>
#include <string>

namespace lpr {

// Error taxonomy shared by all modules. The CLI maps ErrorKind::config to
// exit code 2 and every other kind to exit code 1.
enum class ErrorKind {
  format,      // malformed file or container
  data,        // well-formed input with unusable content
  parameter,   // out-of-range argument
  frame,       // Cartesian/spherical frame mismatch
  shape,       // dimension mismatch
  coordinate,  // coordinate-set mismatch between tensors
  empty,       // empty cloud / list where content is required
  config,      // invalid pipeline configuration
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct FormatError : Error {
  explicit FormatError(const std::string& m) : Error(ErrorKind::format, m) {}
};
struct DataError : Error {
  explicit DataError(const std::string& m) : Error(ErrorKind::data, m) {}
};
struct ParameterError : Error {
  explicit ParameterError(const std::string& m) : Error(ErrorKind::parameter, m) {}
};
struct FrameError : Error {
  explicit FrameError(const std::string& m) : Error(ErrorKind::frame, m) {}
};
struct ShapeError : Error {
  explicit ShapeError(const std::string& m) : Error(ErrorKind::shape, m) {}
};
struct CoordinateError : Error {
  explicit CoordinateError(const std::string& m) : Error(ErrorKind::coordinate, m) {}
};
struct EmptyError : Error {
  explicit EmptyError(const std::string& m) : Error(ErrorKind::empty, m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorKind::config, m) {}
};

}  // namespace lpr
