#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace feynman {

enum class Errc {
  NotConnected,
  DegreeOneVertex,
  BadGeometry,
  DanglingReference,
  NotAdjacent,
  Backtrack,
  WindingNotIntegral,
  NonIntegralTrace,
  NonIntegralCoefficient,
  NonIntegerCount,
  ZeroConstantTerm,
  BadConstantTerm,
  TooLarge,
  ParityViolation,
  UnknownFamily,
  BadParams,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::DegreeOneVertex: return "DegreeOneVertex";
    case Errc::BadGeometry: return "BadGeometry";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::Backtrack: return "Backtrack";
    case Errc::WindingNotIntegral: return "WindingNotIntegral";
    case Errc::NonIntegralTrace: return "NonIntegralTrace";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::NonIntegerCount: return "NonIntegerCount";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadParams: return "BadParams";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for errors caused by the caller's graph or arguments rather than
  /// by a failed integrality or identity check downstream.
  bool is_input_error() const noexcept {
    switch (code_) {
      case Errc::NotConnected:
      case Errc::DegreeOneVertex:
      case Errc::BadGeometry:
      case Errc::DanglingReference:
      case Errc::UnknownFamily:
      case Errc::BadParams:
      case Errc::ParseError:
      case Errc::TooLarge:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

}  // namespace feynman
