#pragma once

#include <stdexcept>
#include <string>

namespace rdp {

// Failure taxonomy shared by all modules. Each error carries a kind so
// callers (CLI rows, sweep drivers) can react without parsing messages.
enum class ErrorKind {
    kInvalidInput,      // dimension mismatch, malformed argument
    kInvalidParameter,  // scalar parameter outside its domain
    kDegenerateMarginal,
    kDivergenceInfinite,
    kGridMismatch,
    kIngestion,         // file parse / validation failure
    kInfeasible,        // (D, P) pair not achievable
    kStability,         // kernel/scaling exponents left the representable range
    kDegenerateState,   // zero denominator inside an update
};

const char* to_string(ErrorKind kind);

class RdpError : public std::runtime_error {
  public:
    RdpError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class InfeasibleError : public RdpError {
  public:
    InfeasibleError(const std::string& message, double min_distortion)
        : RdpError(ErrorKind::kInfeasible, message), min_distortion_(min_distortion) {}

    // Minimal achievable distortion at r = p, reported so callers can fix D.
    double min_distortion() const noexcept { return min_distortion_; }

  private:
    double min_distortion_;
};

}  // namespace rdp
