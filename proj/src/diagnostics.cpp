#include "aspectke/diagnostics.hpp"

namespace aspectke {

std::string to_string(const SourceSpan& span) {
  std::string out = span.file.empty() ? "<input>" : span.file;
  out += ':' + std::to_string(span.line) + ':' + std::to_string(span.column);
  return out;
}

std::string to_string(const Violation& v) {
  std::string out = to_string(v.span) + ": " + v.rule;
  if (!v.subject.empty()) out += ": " + v.subject;
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

namespace {

std::string parse_message(const SourceSpan& span, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::string msg = to_string(span) + ": parse error: expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

std::string validation_message(const std::vector<Violation>& vs) {
  std::string msg;
  for (const auto& v : vs) {
    if (!msg.empty()) msg += '\n';
    msg += to_string(v);
  }
  return msg;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::vector<std::string> expected, std::string found)
    : std::runtime_error(parse_message(span, expected, found)),
      span_(std::move(span)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(validation_message(violations)), violations_(std::move(violations)) {}

}  // namespace aspectke
