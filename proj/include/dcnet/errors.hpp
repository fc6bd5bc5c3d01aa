#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dcnet {

// Every domain failure carries one of these codes; the CLI prints the
// code name on stderr and exits 1, so the names are part of the interface.
enum class Errc {
  SyntaxError,
  CycleDetected,
  NoRoot,
  MultipleRoots,
  UnlabeledLeaf,
  TaxonNotALeaf,
  DuplicateArc,
  DuplicateTaxon,
  MissingTaxon,
  TooManyTaxa,
  NotDistinctCluster,
  TaxonSetMismatch,
  IndexMissingCluster,
  InvalidP,
  InvalidN,
  TooLarge,
  VertexIsRoot,
  VertexIsLeaf,
  NoSuchCluster,
  NoSuchArc,
  ArcNotRedundant,
  KeepMissingTrivial,
  KeepNotSubsetOfVertices,
  NotO1Network,
  AlreadyHasO1Hybrid,
  NotExtendedDC,
  NoAdmissibleInstance,
  GenerationExhausted,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message);
  // detail is a 1-based line number (parse errors) or step index (sequences).
  Error(Errc code, std::string message, int detail);

  Errc code() const { return code_; }
  std::optional<int> detail() const { return detail_; }

private:
  Errc code_;
  std::optional<int> detail_;
};

[[noreturn]] void fail(Errc code, std::string message);
[[noreturn]] void fail(Errc code, std::string message, int detail);

}  // namespace dcnet
