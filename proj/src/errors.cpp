#include "dcnet/errors.hpp"

namespace dcnet {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NoRoot: return "NoRoot";
    case Errc::MultipleRoots: return "MultipleRoots";
    case Errc::UnlabeledLeaf: return "UnlabeledLeaf";
    case Errc::TaxonNotALeaf: return "TaxonNotALeaf";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::DuplicateTaxon: return "DuplicateTaxon";
    case Errc::MissingTaxon: return "MissingTaxon";
    case Errc::TooManyTaxa: return "TooManyTaxa";
    case Errc::NotDistinctCluster: return "NotDistinctCluster";
    case Errc::TaxonSetMismatch: return "TaxonSetMismatch";
    case Errc::IndexMissingCluster: return "IndexMissingCluster";
    case Errc::InvalidP: return "InvalidP";
    case Errc::InvalidN: return "InvalidN";
    case Errc::TooLarge: return "TooLarge";
    case Errc::VertexIsRoot: return "VertexIsRoot";
    case Errc::VertexIsLeaf: return "VertexIsLeaf";
    case Errc::NoSuchCluster: return "NoSuchCluster";
    case Errc::NoSuchArc: return "NoSuchArc";
    case Errc::ArcNotRedundant: return "ArcNotRedundant";
    case Errc::KeepMissingTrivial: return "KeepMissingTrivial";
    case Errc::KeepNotSubsetOfVertices: return "KeepNotSubsetOfVertices";
    case Errc::NotO1Network: return "NotO1Network";
    case Errc::AlreadyHasO1Hybrid: return "AlreadyHasO1Hybrid";
    case Errc::NotExtendedDC: return "NotExtendedDC";
    case Errc::NoAdmissibleInstance: return "NoAdmissibleInstance";
    case Errc::GenerationExhausted: return "GenerationExhausted";
  }
  return "UnknownError";
}

Error::Error(Errc code, std::string message)
    : std::runtime_error(std::move(message)), code_(code) {}

Error::Error(Errc code, std::string message, int detail)
    : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

void fail(Errc code, std::string message) { throw Error(code, std::move(message)); }

void fail(Errc code, std::string message, int detail) {
  throw Error(code, std::move(message), detail);
}

}  // namespace dcnet
