#pragma once

#include <stdexcept>
#include <string>

namespace mfc {

// Malformed input text. line() is 1-based, or -1 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + message
                                     : message),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

// Well-formed input that breaks a corpus invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message, std::string publication_id = {},
                           long line = -1)
      : std::runtime_error(decorate(message, publication_id, line)),
        publication_id_(std::move(publication_id)),
        line_(line) {}

  const std::string& publication_id() const noexcept { return publication_id_; }
  long line() const noexcept { return line_; }

 private:
  static std::string decorate(const std::string& message, const std::string& pub, long line) {
    std::string out;
    if (line >= 0) out += "line " + std::to_string(line) + ": ";
    if (!pub.empty()) out += "publication '" + pub + "': ";
    return out + message;
  }

  std::string publication_id_;
  long line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mfc
