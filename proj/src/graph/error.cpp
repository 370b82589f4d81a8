#include "gc/error.hpp"

namespace gc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonTrivalent: return "NonTrivalent";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::LoopContraction: return "LoopContraction";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::PrimeDisagreement: return "PrimeDisagreement";
    case ErrorKind::WrongK: return "WrongK";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidDecoration: return "InvalidDecoration";
    case ErrorKind::NonIntegerOrbit: return "NonIntegerOrbit";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gc
