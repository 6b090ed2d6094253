#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liebra/dercalc.hpp"
#include "liebra/liealg.hpp"

namespace liebra {

/// One product row of a published multiplication table, kept verbatim so the
/// audit can compare the constructed algebra against the table as printed.
struct PrintedBracket {
  std::string left, right;
  std::vector<std::pair<std::string, std::string>> value; // label -> affine expr
};

struct ExpectedDefect {
  std::vector<std::string> triple;                          // three basis labels
  std::vector<std::pair<std::string, std::string>> residual; // label -> rational
};

/// Machine-checkable claims attached to a catalog entry.
struct EntryClaims {
  std::size_t dim = 0;
  std::size_t nilradical_dim = 0;
  std::size_t nilindex = 0; // of the nilradical
  std::size_t type = 0;     // of the nilradical
  bool solvable = false;    // of the whole algebra
  std::optional<std::vector<long>> levi_module; // highest weights, descending
  std::vector<PrintedBracket> printed;          // table rows to verify
  std::vector<std::string> notes;               // documented misprints to surface
  std::optional<ExpectedDefect> expected_defect; // negative controls only
};

/// A catalog entry instantiated at concrete parameter values.
struct BuiltEntry {
  LieAlgebra alg;
  std::size_t nilradical_dim = 0; // the first nilradical_dim basis vectors
  Subspace nilradical;
  std::vector<std::string> solvable_gens; // labels of the abelian complement part
  bool has_sl2 = false;                   // labels e, f, h present
  bool skip_jacobi_throw = false;         // negative controls build without validation
};

class CatalogEntryData; // parsed builder recipe (internal)

struct CatalogEntry {
  std::string name;
  std::string file;
  std::vector<std::string> params; // ordered parameter names
  std::map<std::string, std::vector<Rational>> samples;
  bool negative_control = false;
  EntryClaims claims;
  std::shared_ptr<const CatalogEntryData> data;

  /// Instantiate at parameter values; validation (Jacobi) is skipped for
  /// negative controls so their defects can be inspected.
  BuiltEntry build(const std::map<std::string, Rational>& values = {}) const;

  /// All sample combinations (cartesian over params), for audits.
  std::vector<std::map<std::string, Rational>> sample_points() const;
};

/// The bundled entry collection, read from a directory of JSON files plus
/// manifest.json. An empty dir means: $LIEBRA_CATALOG_DIR if set, else the
/// build-time default location.
class Catalog {
public:
  static Catalog load(const std::string& dir = "");
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& entry(const std::string& name) const; // throws if absent
  bool has(const std::string& name) const;
  const std::string& dir() const { return dir_; }

private:
  std::string dir_;
  std::vector<CatalogEntry> entries_;
};

/// Convenience lookup + build.
LieAlgebra algebra_by_name(const std::string& name,
                           const std::map<std::string, Rational>& params = {},
                           const std::string& dir = "");

struct AuditCheck {
  std::string entry;   // entry name or section name
  std::string check;   // short check id
  bool pass;           // the observed result matched the expectation
  std::string detail;  // human-readable specifics
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_ok() const;
  std::size_t passed() const;
  std::string text() const; // table renderer
};

/// Verifies every positive catalog entry at all its sample points (Jacobi,
/// nilradical claims, pencil freeness, nilindex/type, published table rows,
/// sl2 module structure), plus the derivation-structure facts for the free
/// nilpotent bases (t <= 4), the published conjugation reductions, and
/// fingerprint separations. Entries are checked concurrently under the
/// parallel policy; report order does not depend on the policy.
AuditReport audit_all(const Catalog& c, Exec policy = Exec::automatic);

/// Negative controls: deliberately altered data that must fail in the
/// documented way (a reproduced defect counts as a passing check).
AuditReport misprint_witnesses(const Catalog& c);

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central; // dims, stabilization convention
  std::vector<std::size_t> derived;       // dims
  std::size_t center_dim = 0;
  std::size_t der_dim = 0; // dim of the derivation algebra
  std::size_t type = 0;    // dim - dim [a,a]
  std::optional<std::size_t> nilradical_nilindex;
  std::string nilradical_source; // "given", "self", "derived-subalgebra", "unknown"

  std::string str() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

/// Isomorphism-invariant tuple. The nilradical component uses the supplied
/// subspace when given; otherwise the algebra itself (if nilpotent) or the
/// derived subalgebra (if that is a nilpotent ideal), recording the source.
Fingerprint invariant_fingerprint(const LieAlgebra& a,
                                  std::optional<Subspace> nilradical = std::nullopt);

} // namespace liebra
