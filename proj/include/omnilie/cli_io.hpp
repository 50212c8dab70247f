#ifndef OMNILIE_CLI_IO_HPP
#define OMNILIE_CLI_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omnilie/dirac_bundle.hpp"
#include "omnilie/omni_point.hpp"

namespace omnilie {

/// Schema version stamped into every model file.
inline constexpr const char* kModelFormat = "omnilie/1";
/// Schema version stamped into every report.
inline constexpr const char* kReportFormat = "omnilie-report/1";
/// Tool version reported by the CLI.
inline constexpr const char* kToolVersion = "0.1.0";

/// The six payload shapes a model file can carry.
enum class ModelKind {
  PointSubspace,  ///< subspace of gl(V) + V over a point
  LieAlgebra,     ///< structure constants plus a representation
  Algebroid,      ///< projective Lie algebroid presentation
  Dirac,          ///< Dirac structure presentation over a chart
  Deformation,    ///< algebroid plus a skew table of deformation values
  Bialgebroid     ///< anchor algebroid plus a dual anchor algebroid
};

const char* model_kind_name(ModelKind k);

/// One self-describing model document. The header (kind, d, r, coefficient
/// kind) and metadata (name, description) are common; exactly the payload
/// fields of the active kind are meaningful.
struct ModelFile {
  ModelKind kind = ModelKind::LieAlgebra;
  int d = 0;  ///< base dimension; 0 for pointwise payloads
  int r = 0;  ///< fibre / vector-space dimension
  std::string name;
  std::string description;

  // PointSubspace
  PointDirac point;
  // LieAlgebra
  LieStruct lie;
  Rep rep;
  // Algebroid; also the base of Dirac lift / graph-pi payloads, the base of
  // a Deformation payload, and the primal side of a Bialgebroid payload.
  ProjAlgebroid algebroid;
  // Dirac
  DiracKind dirac_kind = DiracKind::Lift;
  MatP lambda;                          ///< graph-lambda data, r x d
  std::vector<std::vector<VecP>> zeta;  ///< graph-lambda data, d x d skew
  // Deformation
  std::vector<std::vector<VecP>> omega;  ///< frame_count x frame_count skew
  // Bialgebroid
  ProjAlgebroid dual;

  /// Rebuilds the generated Dirac presentation of a Dirac payload.
  DiracPres dirac() const;

  friend bool operator==(const ModelFile& a, const ModelFile& b);
  friend bool operator!=(const ModelFile& a, const ModelFile& b) { return !(a == b); }
};

/// Parses one JSON model document. Schema violations raise positioned Parse
/// errors; violated type invariants (skewness, lowest terms, shape
/// consistency) raise Semantic errors naming the offending field.
ModelFile parse_model(const std::string& text);

/// Canonical serialization; parse_model(serialize_model(m)) == m, and the
/// serialized text of equal models is byte-identical.
std::string serialize_model(const ModelFile& m);

/// One executed check: a stable name, the law it tests stated as behavior,
/// the verdict, and a witness (counterexample or summary data).
struct CheckRecord {
  std::string name;
  std::string law;
  bool pass = false;
  std::string witness;
};

/// Deterministic run report: identical command, model and seed produce
/// byte-identical text and JSON renderings.
struct Report {
  std::string command;
  std::string model;  ///< metadata name of the model acted on; empty when none
  std::optional<std::uint64_t> seed;  ///< set iff the command consumed the seed
  std::vector<CheckRecord> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Tunables for seeded corpora; defaults match the documented CLI defaults.
struct RunFlags {
  std::uint64_t seed = 1;
  int d = 2;
  int r = 2;
  int deg = 2;
  int count = 20;
};

struct RunResult {
  Report report;
  /// Result model of lift / reduce (and of catalog resolution); the CLI
  /// writes it to --out when present, and the report otherwise.
  std::optional<ModelFile> artifact;
};

/// Executes one command. Commands: check-lie, check-dirac, lift, reduce,
/// normalizer, derivations, cohomology, deform, bialgebra, graph-lambda,
/// pi-bracket, verify-axioms, catalog. Unknown commands, missing models and
/// payload-kind mismatches raise Input errors (CLI exit 2); check failures
/// are reported, not thrown (CLI exit 1).
RunResult run_command(const std::string& cmd, const std::optional<ModelFile>& model,
                      const RunFlags& flags);

/// Built-in example models with unique names; every entry passes the command
/// primary_command names for it.
const std::vector<ModelFile>& catalog();
std::optional<ModelFile> catalog_find(const std::string& name);

/// The command that constitutes an entry's own primary check, derived from
/// its payload kind.
std::string primary_command(const ModelFile& m);

/// Resolves a --model argument: "catalog:NAME" names a built-in entry, any
/// other string is read as a file path.
ModelFile load_model(const std::string& spec);

/// Exit code of a completed run: 0 when every check passed, 1 otherwise.
/// (Input errors never reach a Report; the CLI maps them to exit 2.)
int exit_code(const Report& r);

}  // namespace omnilie

#endif
