#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folidx/gauss_bonnet.hpp"
#include "folidx/signature.hpp"

namespace folidx {

// Expected values always travel with a citation string naming the identity
// or computation they come from.
struct ExpectedInt {
  long long value = 0;
  std::string citation;
};

struct ExpectedBetti {
  BettiVector value;
  std::string citation;
};

struct ExpectedIntList {
  std::vector<long long> value;
  std::string citation;
};

struct ExpectedRational {
  Rational value;
  std::string citation;
};

struct ExpectedBool {
  bool value = true;
  std::string citation;
};

// Boolean property checked over a range of group orders.
struct ExpectedSweep {
  bool value = true;
  long long max_p = 0;
  std::string citation;
};

struct EtaExpectation {
  long long p = 0, m = 0, n = 0;
  Rational value;
  std::string citation;
};

struct ExpectedBlock {
  std::optional<ExpectedInt> basic_euler;
  std::optional<ExpectedBetti> oracle_betti;
  std::optional<ExpectedIntList> rep_euler;   // one entry per character index
  std::optional<ExpectedRational> signature;  // both display forms must hit this
  std::optional<ExpectedBool> blowup_defect;
  std::vector<EtaExpectation> eta;
  std::optional<ExpectedSweep> cot_closed_form;
  std::optional<ExpectedSweep> eta_float_agreement;
};

// Oracle descriptor for suspension examples: fiber model (with its holonomy
// generator baked in) plus the order of the finite structure group.
struct SuspensionDoc {
  FiberModel fiber;
  long long group_order = 1;
};

// One example file: strata for the assembly side, optional oracle
// descriptors, optional rho table, optional signature problem, and the
// expected constants. Strata may be absent only for signature-only
// documents.
struct ExampleDocument {
  std::string schema_version = "1";
  std::string name;
  std::vector<Stratum> strata;
  bool has_strata = false;
  std::optional<SuspensionDoc> suspension;
  std::optional<FlatCircleBundle> torus_bundle;
  std::optional<RhoTable> rho_table;
  std::optional<SignatureProblem> signature;
  ExpectedBlock expected;
};

// Parses and validates one document. origin is used in error messages.
// Throws ParseError / SchemaError / ValidationError (or the inner domain
// errors, e.g. InvalidLensDatum for bad gcd data).
ExampleDocument parse_example(std::string_view text, std::string_view origin = "<memory>");
ExampleDocument load_example(const std::filesystem::path& path);

// Canonical JSON: sorted keys, no insignificant whitespace, rationals as
// "a/b" strings.
std::string serialize_example(const ExampleDocument& doc);

// Assembly-side view; requires strata.
FoliationExample to_foliation(const ExampleDocument& doc);

// Oracle-side view: betti vector of the basic complex from the suspension
// or torus-bundle descriptor, when one is present.
std::optional<BettiVector> oracle_betti(const ExampleDocument& doc);

// The built-in examples (six foliation examples plus the lens-space
// eta/signature identities).
const std::vector<ExampleDocument>& builtin_catalog();
const ExampleDocument* find_builtin(std::string_view name);

struct VerifyRow {
  std::string name;
  std::optional<std::string> assembled;
  std::optional<std::string> oracle;
  std::optional<std::string> expected;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  long long passed = 0;
  long long failed = 0;
};

struct VerifyOptions {
  bool use_oracle = true;
  std::string inject_fault;  // row name whose expected value gets perturbed
  std::optional<std::filesystem::path> catalog_dir;  // override the built-ins
};

// Evaluates every catalog document on all available channels (assembled
// value, independent oracle, expected constant). A row passes iff all of
// its present channels agree exactly.
VerifyReport verify_catalog(const VerifyOptions& options = {});

// Report renderings: fixed-width table and canonical JSON.
std::string report_table(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

// Active document set: the override directory (all *.json, sorted) when
// given, the built-ins otherwise.
std::vector<ExampleDocument> active_catalog(const std::optional<std::filesystem::path>& dir);

namespace detail {
// Raw JSON text of each built-in document (round-trip test support).
std::vector<std::string> builtin_texts();
}  // namespace detail

}  // namespace folidx
