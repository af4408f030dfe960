#include "folidx/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <sstream>

#include "folidx/sweep.hpp"

namespace folidx {

using json = nlohmann::json;

namespace {

// ---- schema helpers -------------------------------------------------------

[[noreturn]] void schema_fail(const std::string& ctx, const std::string& what) {
  throw SchemaError(ctx + ": " + what);
}

const json& require_key(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(ctx, std::string("missing field '") + key + "'");
  return *it;
}

void require_object(const json& v, const std::string& ctx) {
  if (!v.is_object()) schema_fail(ctx, "expected an object");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& ctx) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) schema_fail(ctx, "unknown field '" + it.key() + "'");
  }
}

long long get_int(const json& v, const std::string& ctx) {
  if (!v.is_number_integer()) schema_fail(ctx, "expected an integer");
  return v.get<long long>();
}

std::string get_string(const json& v, const std::string& ctx) {
  if (!v.is_string()) schema_fail(ctx, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const std::string& ctx) {
  if (!v.is_boolean()) schema_fail(ctx, "expected a boolean");
  return v.get<bool>();
}

std::vector<long long> get_int_array(const json& v, const std::string& ctx) {
  if (!v.is_array()) schema_fail(ctx, "expected an array of integers");
  std::vector<long long> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(get_int(v[i], ctx + "[" + std::to_string(i) + "]"));
  return out;
}

Rational get_rational(const json& v, const std::string& ctx) {
  std::string s = get_string(v, ctx);
  try {
    return Rational::parse(s);
  } catch (const ParseError& e) {
    schema_fail(ctx, e.what());
  }
}

// ---- fiber models ---------------------------------------------------------

IntMatrix parse_matrix(const json& v, const std::string& ctx) {
  if (!v.is_array()) schema_fail(ctx, "expected a matrix (array of rows)");
  std::vector<std::vector<long long>> rows;
  for (size_t i = 0; i < v.size(); ++i)
    rows.push_back(get_int_array(v[i], ctx + "[" + std::to_string(i) + "]"));
  return IntMatrix::from_rows(rows);
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

FiberModel parse_fiber(const json& v, const std::string& ctx) {
  require_object(v, ctx);
  std::string kind = get_string(require_key(v, "kind", ctx), ctx + ".kind");
  if (kind == "torus") {
    reject_unknown(v, {"kind", "rank", "h1_matrix"}, ctx);
    long long rank = get_int(require_key(v, "rank", ctx), ctx + ".rank");
    IntMatrix h1 = parse_matrix(require_key(v, "h1_matrix", ctx), ctx + ".h1_matrix");
    return FiberModel::torus(static_cast<int>(rank), h1);
  }
  if (kind == "sphere2" || kind == "circle") {
    reject_unknown(v, {"kind", "top_sign"}, ctx);
    long long sign = get_int(require_key(v, "top_sign", ctx), ctx + ".top_sign");
    return kind == "sphere2" ? FiberModel::sphere2(static_cast<int>(sign))
                             : FiberModel::circle(static_cast<int>(sign));
  }
  if (kind == "product") {
    reject_unknown(v, {"kind", "factors"}, ctx);
    const json& factors = require_key(v, "factors", ctx);
    if (!factors.is_array() || factors.empty())
      schema_fail(ctx + ".factors", "expected a nonempty array");
    std::vector<FiberModel> models;
    for (size_t i = 0; i < factors.size(); ++i)
      models.push_back(parse_fiber(factors[i], ctx + ".factors[" + std::to_string(i) + "]"));
    return FiberModel::product(std::move(models));
  }
  schema_fail(ctx + ".kind", "unknown fiber kind '" + kind + "'");
}

json fiber_to_json(const FiberModel& f) {
  json v;
  switch (f.kind) {
    case FiberModel::Kind::torus:
      v["kind"] = "torus";
      v["rank"] = f.torus_rank;
      v["h1_matrix"] = matrix_to_json(f.h1_action);
      break;
    case FiberModel::Kind::sphere2:
      v["kind"] = "sphere2";
      v["top_sign"] = f.top_sign;
      break;
    case FiberModel::Kind::circle:
      v["kind"] = "circle";
      v["top_sign"] = f.top_sign;
      break;
    case FiberModel::Kind::product: {
      v["kind"] = "product";
      json factors = json::array();
      for (const FiberModel& g : f.factors) factors.push_back(fiber_to_json(g));
      v["factors"] = factors;
      break;
    }
  }
  return v;
}

// ---- strata ---------------------------------------------------------------

ExtendedSpace parse_quotient(const json& v, const std::string& ctx) {
  require_object(v, ctx);
  reject_unknown(v, {"kind", "euler_closed"}, ctx);
  std::string kind = get_string(require_key(v, "kind", ctx), ctx + ".kind");
  ExtendedSpace space;
  if (kind == "closed")
    space.kind = SpaceKind::closed;
  else if (kind == "open")
    space.kind = SpaceKind::open;
  else
    schema_fail(ctx + ".kind", "expected 'closed' or 'open'");
  space.euler_closed = get_int(require_key(v, "euler_closed", ctx), ctx + ".euler_closed");
  return space;
}

LeafClosureModel parse_leaf_closure(const json& v, const std::string& ctx) {
  require_object(v, ctx);
  std::string model = get_string(require_key(v, "model", ctx), ctx + ".model");
  if (model == "single_leaf") {
    reject_unknown(v, {"model"}, ctx);
    return SingleLeaf{};
  }
  if (model == "irrational_flow_torus") {
    reject_unknown(v, {"model"}, ctx);
    return IrrationalFlowTorus{};
  }
  if (model == "quotient_betti") {
    reject_unknown(v, {"model", "betti"}, ctx);
    BettiVector betti = get_int_array(require_key(v, "betti", ctx), ctx + ".betti");
    if (betti.empty()) schema_fail(ctx + ".betti", "expected a nonempty array");
    return QuotientBetti{betti};
  }
  if (model == "suspension_closure") {
    reject_unknown(v, {"model", "fiber", "group_order"}, ctx);
    SuspensionClosure closure;
    closure.fiber = parse_fiber(require_key(v, "fiber", ctx), ctx + ".fiber");
    closure.group.order = get_int(require_key(v, "group_order", ctx), ctx + ".group_order");
    if (closure.group.order < 1) schema_fail(ctx + ".group_order", "must be >= 1");
    validate_action(fiber_action(closure.fiber, closure.group));
    return closure;
  }
  schema_fail(ctx + ".model", "unknown leaf closure model '" + model + "'");
}

json leaf_closure_to_json(const LeafClosureModel& model) {
  json v;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SingleLeaf>) {
          v["model"] = "single_leaf";
        } else if constexpr (std::is_same_v<T, IrrationalFlowTorus>) {
          v["model"] = "irrational_flow_torus";
        } else if constexpr (std::is_same_v<T, QuotientBetti>) {
          v["model"] = "quotient_betti";
          v["betti"] = m.betti;
        } else {
          v["model"] = "suspension_closure";
          v["fiber"] = fiber_to_json(m.fiber);
          v["group_order"] = m.group.order;
        }
      },
      model);
  return v;
}

Stratum parse_stratum(const json& v, const std::string& ctx) {
  require_object(v, ctx);
  reject_unknown(v, {"name", "quotient", "leaf_closure", "twist"}, ctx);
  Stratum s;
  s.name = get_string(require_key(v, "name", ctx), ctx + ".name");
  s.quotient = parse_quotient(require_key(v, "quotient", ctx), ctx + ".quotient");
  s.leaf_closure = parse_leaf_closure(require_key(v, "leaf_closure", ctx), ctx + ".leaf_closure");
  std::string twist = get_string(require_key(v, "twist", ctx), ctx + ".twist");
  if (twist == "trivial")
    s.twist = OrientationTwist::trivial;
  else if (twist == "sign")
    s.twist = OrientationTwist::sign;
  else
    schema_fail(ctx + ".twist", "expected 'trivial' or 'sign'");
  return s;
}

json stratum_to_json(const Stratum& s) {
  json v;
  v["name"] = s.name;
  v["quotient"] = {{"kind", s.quotient.kind == SpaceKind::closed ? "closed" : "open"},
                   {"euler_closed", s.quotient.euler_closed}};
  v["leaf_closure"] = leaf_closure_to_json(s.leaf_closure);
  v["twist"] = s.twist == OrientationTwist::trivial ? "trivial" : "sign";
  return v;
}

// ---- expected block -------------------------------------------------------

std::string get_citation(const json& v, const std::string& ctx) {
  std::string c = get_string(require_key(v, "citation", ctx), ctx + ".citation");
  if (c.empty()) schema_fail(ctx + ".citation", "citation must be nonempty");
  return c;
}

ExpectedBlock parse_expected(const json& v, const std::string& ctx) {
  require_object(v, ctx);
  reject_unknown(v,
                 {"basic_euler", "oracle_betti", "rep_euler", "signature", "blowup_defect",
                  "eta", "cot_closed_form", "eta_float_agreement"},
                 ctx);
  ExpectedBlock e;
  if (v.contains("basic_euler")) {
    const json& b = v["basic_euler"];
    require_object(b, ctx + ".basic_euler");
    reject_unknown(b, {"value", "citation"}, ctx + ".basic_euler");
    e.basic_euler = ExpectedInt{get_int(require_key(b, "value", ctx), ctx + ".basic_euler.value"),
                                get_citation(b, ctx + ".basic_euler")};
  }
  if (v.contains("oracle_betti")) {
    const json& b = v["oracle_betti"];
    require_object(b, ctx + ".oracle_betti");
    reject_unknown(b, {"value", "citation"}, ctx + ".oracle_betti");
    e.oracle_betti =
        ExpectedBetti{get_int_array(require_key(b, "value", ctx), ctx + ".oracle_betti.value"),
                      get_citation(b, ctx + ".oracle_betti")};
  }
  if (v.contains("rep_euler")) {
    const json& b = v["rep_euler"];
    require_object(b, ctx + ".rep_euler");
    reject_unknown(b, {"value", "citation"}, ctx + ".rep_euler");
    e.rep_euler =
        ExpectedIntList{get_int_array(require_key(b, "value", ctx), ctx + ".rep_euler.value"),
                        get_citation(b, ctx + ".rep_euler")};
  }
  if (v.contains("signature")) {
    const json& b = v["signature"];
    require_object(b, ctx + ".signature");
    reject_unknown(b, {"value", "citation"}, ctx + ".signature");
    e.signature =
        ExpectedRational{get_rational(require_key(b, "value", ctx), ctx + ".signature.value"),
                         get_citation(b, ctx + ".signature")};
  }
  if (v.contains("blowup_defect")) {
    const json& b = v["blowup_defect"];
    require_object(b, ctx + ".blowup_defect");
    reject_unknown(b, {"value", "citation"}, ctx + ".blowup_defect");
    e.blowup_defect =
        ExpectedBool{get_bool(require_key(b, "value", ctx), ctx + ".blowup_defect.value"),
                     get_citation(b, ctx + ".blowup_defect")};
  }
  if (v.contains("eta")) {
    const json& arr = v["eta"];
    if (!arr.is_array()) schema_fail(ctx + ".eta", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string ictx = ctx + ".eta[" + std::to_string(i) + "]";
      const json& b = arr[i];
      require_object(b, ictx);
      reject_unknown(b, {"p", "m", "n", "value", "citation"}, ictx);
      EtaExpectation x;
      x.p = get_int(require_key(b, "p", ictx), ictx + ".p");
      x.m = get_int(require_key(b, "m", ictx), ictx + ".m");
      x.n = get_int(require_key(b, "n", ictx), ictx + ".n");
      x.value = get_rational(require_key(b, "value", ictx), ictx + ".value");
      x.citation = get_citation(b, ictx);
      e.eta.push_back(std::move(x));
    }
  }
  auto parse_sweep = [&](const char* key) -> std::optional<ExpectedSweep> {
    if (!v.contains(key)) return std::nullopt;
    std::string sctx = ctx + "." + key;
    const json& b = v[key];
    require_object(b, sctx);
    reject_unknown(b, {"value", "max_p", "citation"}, sctx);
    ExpectedSweep s;
    s.value = get_bool(require_key(b, "value", sctx), sctx + ".value");
    s.max_p = get_int(require_key(b, "max_p", sctx), sctx + ".max_p");
    if (s.max_p < 2) schema_fail(sctx + ".max_p", "must be >= 2");
    s.citation = get_citation(b, sctx);
    return s;
  };
  e.cot_closed_form = parse_sweep("cot_closed_form");
  e.eta_float_agreement = parse_sweep("eta_float_agreement");
  return e;
}

json expected_to_json(const ExpectedBlock& e) {
  json v = json::object();
  if (e.basic_euler)
    v["basic_euler"] = {{"value", e.basic_euler->value}, {"citation", e.basic_euler->citation}};
  if (e.oracle_betti)
    v["oracle_betti"] = {{"value", e.oracle_betti->value},
                         {"citation", e.oracle_betti->citation}};
  if (e.rep_euler)
    v["rep_euler"] = {{"value", e.rep_euler->value}, {"citation", e.rep_euler->citation}};
  if (e.signature)
    v["signature"] = {{"value", e.signature->value.str()}, {"citation", e.signature->citation}};
  if (e.blowup_defect)
    v["blowup_defect"] = {{"value", e.blowup_defect->value},
                          {"citation", e.blowup_defect->citation}};
  if (!e.eta.empty()) {
    json arr = json::array();
    for (const EtaExpectation& x : e.eta)
      arr.push_back({{"p", x.p},
                     {"m", x.m},
                     {"n", x.n},
                     {"value", x.value.str()},
                     {"citation", x.citation}});
    v["eta"] = arr;
  }
  auto sweep_json = [](const ExpectedSweep& s) {
    return json{{"value", s.value}, {"max_p", s.max_p}, {"citation", s.citation}};
  };
  if (e.cot_closed_form) v["cot_closed_form"] = sweep_json(*e.cot_closed_form);
  if (e.eta_float_agreement) v["eta_float_agreement"] = sweep_json(*e.eta_float_agreement);
  return v;
}

// ---- document -------------------------------------------------------------

ExampleDocument parse_document(const json& root, const std::string& ctx) {
  require_object(root, ctx);
  reject_unknown(root,
                 {"schema_version", "name", "strata", "suspension", "torus_bundle", "rho_table",
                  "signature", "expected"},
                 ctx);
  ExampleDocument doc;
  doc.schema_version =
      get_string(require_key(root, "schema_version", ctx), ctx + ".schema_version");
  if (doc.schema_version != "1")
    schema_fail(ctx + ".schema_version", "unsupported version '" + doc.schema_version + "'");
  doc.name = get_string(require_key(root, "name", ctx), ctx + ".name");
  if (doc.name.empty()) schema_fail(ctx + ".name", "name must be nonempty");

  if (root.contains("strata")) {
    const json& arr = root["strata"];
    if (!arr.is_array()) schema_fail(ctx + ".strata", "expected an array");
    if (arr.empty()) schema_fail(ctx + ".strata", "strata array must be nonempty");
    for (size_t i = 0; i < arr.size(); ++i)
      doc.strata.push_back(parse_stratum(arr[i], ctx + ".strata[" + std::to_string(i) + "]"));
    doc.has_strata = true;
  }

  if (root.contains("suspension")) {
    std::string sctx = ctx + ".suspension";
    const json& v = root["suspension"];
    require_object(v, sctx);
    reject_unknown(v, {"fiber", "group_order"}, sctx);
    SuspensionDoc s;
    s.fiber = parse_fiber(require_key(v, "fiber", sctx), sctx + ".fiber");
    s.group_order = get_int(require_key(v, "group_order", sctx), sctx + ".group_order");
    if (s.group_order < 1) schema_fail(sctx + ".group_order", "must be >= 1");
    validate_action(fiber_action(s.fiber, FiniteCyclicGroup{s.group_order}));
    doc.suspension = std::move(s);
  }

  if (root.contains("torus_bundle")) {
    std::string sctx = ctx + ".torus_bundle";
    const json& v = root["torus_bundle"];
    require_object(v, sctx);
    reject_unknown(v, {"holonomy"}, sctx);
    std::string h = get_string(require_key(v, "holonomy", sctx), sctx + ".holonomy");
    if (h == "trivial") {
      doc.torus_bundle = FlatCircleBundle::trivial();
    } else if (h == "nontrivial") {
      doc.torus_bundle = FlatCircleBundle::nontrivial();
    } else {
      try {
        doc.torus_bundle = FlatCircleBundle::multiplier(Rational::parse(h));
      } catch (const ParseError& e) {
        schema_fail(sctx + ".holonomy", e.what());
      }
    }
  }

  if (root.contains("rho_table")) {
    std::string sctx = ctx + ".rho_table";
    const json& v = root["rho_table"];
    require_object(v, sctx);
    reject_unknown(v, {"group_order", "per_stratum"}, sctx);
    RhoTable table;
    table.group_order = get_int(require_key(v, "group_order", sctx), sctx + ".group_order");
    if (table.group_order < 1) schema_fail(sctx + ".group_order", "must be >= 1");
    const json& rows = require_key(v, "per_stratum", sctx);
    if (!rows.is_array()) schema_fail(sctx + ".per_stratum", "expected an array");
    for (size_t i = 0; i < rows.size(); ++i) {
      auto row = get_int_array(rows[i], sctx + ".per_stratum[" + std::to_string(i) + "]");
      if (static_cast<long long>(row.size()) != table.group_order)
        schema_fail(sctx + ".per_stratum[" + std::to_string(i) + "]",
                    "expected one entry per character (group order " +
                        std::to_string(table.group_order) + ")");
      table.per_stratum.push_back(std::move(row));
    }
    if (!doc.has_strata) schema_fail(sctx, "rho_table requires strata");
    if (table.per_stratum.size() != doc.strata.size())
      schema_fail(sctx + ".per_stratum", "expected one row per stratum");
    doc.rho_table = std::move(table);
  }

  if (root.contains("signature")) {
    std::string sctx = ctx + ".signature";
    const json& v = root["signature"];
    require_object(v, sctx);
    reject_unknown(v, {"p", "fixed_points", "p1_blowup", "p1_original"}, sctx);
    long long p = get_int(require_key(v, "p", sctx), sctx + ".p");
    const json& pts = require_key(v, "fixed_points", sctx);
    if (!pts.is_array()) schema_fail(sctx + ".fixed_points", "expected an array");
    std::vector<LensDatum> fixed;
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string ictx = sctx + ".fixed_points[" + std::to_string(i) + "]";
      const json& b = pts[i];
      require_object(b, ictx);
      reject_unknown(b, {"m", "n"}, ictx);
      fixed.push_back(LensDatum::make(p, get_int(require_key(b, "m", ictx), ictx + ".m"),
                                      get_int(require_key(b, "n", ictx), ictx + ".n")));
    }
    Rational blowup = get_rational(require_key(v, "p1_blowup", sctx), sctx + ".p1_blowup");
    std::optional<Rational> original;
    if (v.contains("p1_original"))
      original = get_rational(v["p1_original"], sctx + ".p1_original");
    doc.signature = SignatureProblem::make(p, std::move(fixed), std::move(blowup), original);
  }

  if (!doc.has_strata && !doc.signature)
    schema_fail(ctx, "document needs strata or a signature block");

  doc.expected = parse_expected(require_key(root, "expected", ctx), ctx + ".expected");
  return doc;
}

}  // namespace

ExampleDocument parse_example(std::string_view text, std::string_view origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(origin) + ": " + e.what());
  }
  try {
    return parse_document(root, std::string(origin));
  } catch (const SchemaError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidLensDatum& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  } catch (const RelationViolation& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  } catch (const NonpositiveHolonomy& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  }
}

ExampleDocument load_example(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_example(buf.str(), path.string());
}

std::string serialize_example(const ExampleDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  root["name"] = doc.name;
  if (doc.has_strata) {
    json arr = json::array();
    for (const Stratum& s : doc.strata) arr.push_back(stratum_to_json(s));
    root["strata"] = arr;
  }
  if (doc.suspension)
    root["suspension"] = {{"fiber", fiber_to_json(doc.suspension->fiber)},
                          {"group_order", doc.suspension->group_order}};
  if (doc.torus_bundle) {
    const auto& lambda = doc.torus_bundle->holonomy();
    root["torus_bundle"] = {
        {"holonomy", lambda ? lambda->str()
                            : (doc.torus_bundle->is_trivial() ? "trivial" : "nontrivial")}};
  }
  if (doc.rho_table)
    root["rho_table"] = {{"group_order", doc.rho_table->group_order},
                         {"per_stratum", doc.rho_table->per_stratum}};
  if (doc.signature) {
    json pts = json::array();
    for (const LensDatum& d : doc.signature->fixed_points)
      pts.push_back({{"m", d.m}, {"n", d.n}});
    json sig = {{"p", doc.signature->p},
                {"fixed_points", pts},
                {"p1_blowup", doc.signature->p1_blowup.str()}};
    if (doc.signature->p1_original) sig["p1_original"] = doc.signature->p1_original->str();
    root["signature"] = sig;
  }
  root["expected"] = expected_to_json(doc.expected);
  return root.dump();
}

FoliationExample to_foliation(const ExampleDocument& doc) {
  if (!doc.has_strata)
    throw ValidationError("document '" + doc.name + "' has no strata to assemble");
  return FoliationExample{doc.name, doc.strata, doc.rho_table};
}

std::optional<BettiVector> oracle_betti(const ExampleDocument& doc) {
  if (doc.suspension) {
    FiniteCyclicGroup group{doc.suspension->group_order};
    return suspension_basic_betti(doc.suspension->fiber, group, Character::trivial(group));
  }
  if (doc.torus_bundle) return carriere_basic_betti(*doc.torus_bundle);
  return std::nullopt;
}

// ---- verification ---------------------------------------------------------

namespace {

std::string int_str(long long v) { return std::to_string(v); }

std::string betti_str(const BettiVector& b) {
  std::string s = "[";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + "]";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool check_closed_form(long long max_p) {
  for (long long p = 2; p <= max_p; ++p)
    if (cotangent_pair_exact(LensDatum::make(p, 1, 1)) != Rational((p - 1) * (p - 2), 3))
      return false;
  return true;
}

std::vector<VerifyRow> rows_for(const ExampleDocument& doc, const VerifyOptions& options) {
  std::vector<VerifyRow> rows;

  if (doc.has_strata) {
    FoliationExample fol = to_foliation(doc);
    std::optional<BettiVector> oracle =
        options.use_oracle ? oracle_betti(doc) : std::nullopt;

    VerifyRow euler_row;
    euler_row.name = doc.name;
    euler_row.assembled = int_str(gauss_bonnet(fol));
    if (oracle) euler_row.oracle = int_str(basic_euler(*oracle));
    if (doc.expected.basic_euler) euler_row.expected = int_str(doc.expected.basic_euler->value);
    rows.push_back(std::move(euler_row));

    if (doc.expected.oracle_betti || oracle) {
      VerifyRow betti_row;
      betti_row.name = doc.name + ":betti";
      if (oracle) betti_row.oracle = betti_str(*oracle);
      if (doc.expected.oracle_betti)
        betti_row.expected = betti_str(doc.expected.oracle_betti->value);
      rows.push_back(std::move(betti_row));
    }

    if (doc.rho_table || doc.expected.rep_euler) {
      long long order = doc.rho_table ? doc.rho_table->group_order
                                      : (doc.suspension ? doc.suspension->group_order : 0);
      if (doc.expected.rep_euler &&
          static_cast<long long>(doc.expected.rep_euler->value.size()) != order)
        throw ValidationError("document '" + doc.name +
                              "': rep_euler expects one value per character");
      std::optional<GradedAction> action;
      if (options.use_oracle && doc.suspension && doc.suspension->group_order == order)
        action = fiber_action(doc.suspension->fiber, FiniteCyclicGroup{order});
      for (long long j = 0; j < order; ++j) {
        VerifyRow row;
        row.name = doc.name + ":rho" + std::to_string(j);
        Character chi = Character::rho(FiniteCyclicGroup{order}, j);
        row.assembled = int_str(rep_valued_gauss_bonnet(fol, chi));
        if (action) {
          long long chi_rho = 0, sign = 1;
          for (size_t k = 0; k < action->degrees.size(); ++k) {
            chi_rho += sign * isotypic_multiplicity(*action, static_cast<int>(k), chi);
            sign = -sign;
          }
          row.oracle = int_str(chi_rho);
        }
        if (doc.expected.rep_euler) row.expected = int_str(doc.expected.rep_euler->value[j]);
        rows.push_back(std::move(row));
      }
    }
  }

  for (const EtaExpectation& x : doc.expected.eta) {
    VerifyRow row;
    row.name = doc.name + ":eta(" + std::to_string(x.p) + "," + std::to_string(x.m) + "," +
               std::to_string(x.n) + ")";
    row.assembled = eta_lens_signature(LensDatum::make(x.p, x.m, x.n)).str();
    row.expected = x.value.str();
    rows.push_back(std::move(row));
  }

  if (doc.signature) {
    if (doc.expected.signature) {
      VerifyRow row;
      row.name = doc.name + ":signature";
      row.assembled = transverse_signature(*doc.signature).value.str();
      if (options.use_oracle && doc.signature->p1_original)
        row.oracle = transverse_signature_original(*doc.signature).value.str();
      row.expected = doc.expected.signature->value.str();
      rows.push_back(std::move(row));
    }
    if (doc.expected.blowup_defect) {
      VerifyRow row;
      row.name = doc.name + ":blowup-defect";
      row.assembled = bool_str(blowup_defect_check(*doc.signature));
      row.expected = bool_str(doc.expected.blowup_defect->value);
      rows.push_back(std::move(row));
    }
  }

  if (doc.expected.cot_closed_form) {
    VerifyRow row;
    row.name = doc.name + ":cot-closed-form";
    row.assembled = bool_str(check_closed_form(doc.expected.cot_closed_form->max_p));
    row.expected = bool_str(doc.expected.cot_closed_form->value);
    rows.push_back(std::move(row));
  }

  if (doc.expected.eta_float_agreement) {
    VerifyRow row;
    row.name = doc.name + ":eta-float-agreement";
    SweepOutcome sweep = eta_sweep_parallel(doc.expected.eta_float_agreement->max_p);
    row.assembled = bool_str(sweep.within_tolerance && sweep.closed_form_ok);
    row.expected = bool_str(doc.expected.eta_float_agreement->value);
    rows.push_back(std::move(row));
  }

  return rows;
}

void perturb_expected(VerifyRow& row) {
  if (!row.expected) {
    row.expected = "injected";
    return;
  }
  const std::string& s = *row.expected;
  bool integer = !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-') &&
                 s.find_first_not_of("-0123456789") == std::string::npos;
  if (integer)
    row.expected = std::to_string(std::stoll(s) + 1);
  else
    row.expected = s + "!";
}

}  // namespace

VerifyReport verify_catalog(const VerifyOptions& options) {
  std::vector<ExampleDocument> docs = active_catalog(options.catalog_dir);
  std::vector<std::vector<VerifyRow>> per_doc(docs.size());

  // Each document evaluates independently; the report is the only join.
  // Exceptions may not cross the parallel region, so stash the first one.
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(docs.size()); ++i) {
    try {
      per_doc[i] = rows_for(docs[i], options);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(folidx_verify_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  VerifyReport report;
  for (auto& rows : per_doc)
    for (auto& row : rows) report.rows.push_back(std::move(row));

  if (!options.inject_fault.empty()) {
    bool found = false;
    for (VerifyRow& row : report.rows)
      if (row.name == options.inject_fault) {
        perturb_expected(row);
        found = true;
      }
    if (!found)
      throw ValidationError("no verify row named '" + options.inject_fault + "'");
  }

  for (VerifyRow& row : report.rows) {
    std::vector<const std::string*> channels;
    if (row.assembled) channels.push_back(&*row.assembled);
    if (row.oracle) channels.push_back(&*row.oracle);
    if (row.expected) channels.push_back(&*row.expected);
    row.pass = true;
    for (size_t i = 1; i < channels.size(); ++i)
      if (*channels[i] != *channels[0]) row.pass = false;
    if (row.pass)
      ++report.passed;
    else
      ++report.failed;
  }
  return report;
}

std::string report_table(const VerifyReport& report) {
  size_t name_w = 4, a_w = 9, o_w = 6, e_w = 8;
  auto cell = [](const std::optional<std::string>& v) { return v ? *v : std::string("-"); };
  for (const VerifyRow& r : report.rows) {
    name_w = std::max(name_w, r.name.size());
    a_w = std::max(a_w, cell(r.assembled).size());
    o_w = std::max(o_w, cell(r.oracle).size());
    e_w = std::max(e_w, cell(r.expected).size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, size_t w) {
    os << s << std::string(w - s.size() + 2, ' ');
  };
  pad("name", name_w);
  pad("assembled", a_w);
  pad("oracle", o_w);
  pad("expected", e_w);
  os << "status\n";
  for (const VerifyRow& r : report.rows) {
    pad(r.name, name_w);
    pad(cell(r.assembled), a_w);
    pad(cell(r.oracle), o_w);
    pad(cell(r.expected), e_w);
    os << (r.pass ? "pass" : "FAIL") << "\n";
  }
  os << report.passed << " passed, " << report.failed << " failed\n";
  return os.str();
}

std::string report_json(const VerifyReport& report) {
  json rows = json::array();
  for (const VerifyRow& r : report.rows) {
    json row;
    row["name"] = r.name;
    if (r.assembled) row["assembled"] = *r.assembled;
    if (r.oracle) row["oracle"] = *r.oracle;
    if (r.expected) row["expected"] = *r.expected;
    row["status"] = r.pass ? "pass" : "fail";
    rows.push_back(row);
  }
  json root = {{"rows", rows},
               {"summary", {{"passed", report.passed}, {"failed", report.failed}}}};
  return root.dump();
}

std::vector<ExampleDocument> active_catalog(const std::optional<std::filesystem::path>& dir) {
  if (!dir) return builtin_catalog();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<ExampleDocument> docs;
  docs.reserve(files.size());
  for (const auto& f : files) docs.push_back(load_example(f));
  return docs;
}

const ExampleDocument* find_builtin(std::string_view name) {
  for (const ExampleDocument& doc : builtin_catalog())
    if (doc.name == name) return &doc;
  return nullptr;
}

}  // namespace folidx
