#ifndef BDV_SPAN_HPP
#define BDV_SPAN_HPP

#include <string>
#include <vector>

namespace bdv {

/// Half-open source region used by diagnostics and evaluation errors.
struct SourceSpan {
  std::string file;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool valid() const { return start_line > 0; }
  std::string text() const;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class DiagSeverity { Error, Warning };

struct Diagnostic {
  DiagSeverity severity = DiagSeverity::Error;
  SourceSpan span;
  std::string message;

  std::string text() const;
};

std::string render_diagnostics(const std::vector<Diagnostic>& diags);

}  // namespace bdv

#endif
