#ifndef GAITKIT_DIAGNOSTICS_HPP_
#define GAITKIT_DIAGNOSTICS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaitkit {

// Contract violation raised by library operations. `code` is the stable
// machine-readable name (e.g. "MalformedRow", "InvalidCutoff"); the CLI maps
// it to an exit code and prints `code: what()`.
class GaitError : public std::runtime_error {
  public:
    GaitError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

// Non-fatal finding attached to a stream location. Operations that skip or
// drop data report why here instead of failing the whole analysis.
struct Diagnostic {
    std::string code;
    std::string detail;
    std::optional<std::size_t> index;  // sample index or line number

    std::string format() const {
        std::string s = code;
        if (index) s += " at " + std::to_string(*index);
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

using DiagnosticList = std::vector<Diagnostic>;

}  // namespace gaitkit

#endif  // GAITKIT_DIAGNOSTICS_HPP_
