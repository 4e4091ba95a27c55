#include "bdv/span.hpp"

#include <sstream>

namespace bdv {

std::string SourceSpan::text() const {
  std::ostringstream os;
  os << file << ':' << start_line << ':' << start_col;
  if (end_line != start_line || end_col != start_col) {
    os << '-' << end_line << ':' << end_col;
  }
  return os.str();
}

std::string Diagnostic::text() const {
  std::string out;
  if (span.valid() || !span.file.empty()) {
    out += span.text();
    out += ": ";
  }
  out += severity == DiagSeverity::Error ? "error: " : "warning: ";
  out += message;
  return out;
}

std::string render_diagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += d.text();
    out += '\n';
  }
  return out;
}

}  // namespace bdv
