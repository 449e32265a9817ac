#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aspectke {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

/// A broken well-formedness rule. `subject` names the node or aspect,
/// `detail` the offending action or condition.
struct Violation {
  std::string rule;
  std::string subject;
  std::string detail;
  SourceSpan span;
};

std::string to_string(const Violation& v);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::vector<std::string> expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Syntactically fine input that breaks a well-formedness rule.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace aspectke
