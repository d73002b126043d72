#include "torsionlab/error.hpp"

namespace torsionlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Rank: return "rank";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Assignment: return "assignment";
    case ErrorKind::Orbit: return "orbit";
    case ErrorKind::IrrationalScale: return "irrational-scale";
    case ErrorKind::IrrationalConjugator: return "irrational-conjugator";
    case ErrorKind::NotIntegrable: return "not-integrable";
    case ErrorKind::IntegrabilityContradiction: return "integrability-contradiction";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace torsionlab
