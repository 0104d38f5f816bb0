// Command-line front end: wires the library modules into scriptable
// subcommands with deterministic JSON (and CSV/table where tabular) output.
//
// Exit codes: 0 success, 1 domain errors (typed code + message on stderr),
// 2 malformed input or command line.

#include "specbundle/chern.hpp"
#include "specbundle/errors.hpp"
#include "specbundle/gm_family.hpp"
#include "specbundle/hn_polygon.hpp"
#include "specbundle/json_io.hpp"
#include "specbundle/rational.hpp"
#include "specbundle/riemann_roch.hpp"
#include "specbundle/spectrum.hpp"
#include "specbundle/threefold.hpp"

#include "CLI11.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace specbundle;

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

Int int_flag(const std::string& text, const std::string& flag) {
  try {
    Rational v = Rational::parse(text);
    if (!v.is_integer()) throw std::invalid_argument("fractional");
    return v.num();
  } catch (const std::invalid_argument&) {
    throw InputError(flag + " expects an integer, got '" + text + "'");
  }
}

Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw InputError(flag + " expects an integer or 'p/q', got '" + text + "'");
  }
}

std::vector<Int> int_list_flag(const std::string& text, const std::string& flag) {
  std::vector<Int> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ','))
    out.push_back(int_flag(token, flag));
  if (out.empty()) throw InputError(flag + " expects a comma-separated integer list");
  return out;
}

// Shared flag storage; only one leaf subcommand runs per invocation.
struct CommonInput {
  std::string input_path;
  std::string catalog_name;
  std::string m_text;
  std::array<std::string, 6> chern_text;  // same order as BundleChern fields

  Json loaded;
  bool has_loaded = false;

  const Json* doc() {
    if (input_path.empty()) return nullptr;
    if (!has_loaded) {
      loaded = load_json_file(input_path);
      has_loaded = true;
    }
    return &loaded;
  }
};

constexpr std::array<const char*, 6> kChernFlags = {
    "--c1-cubed", "--c1-c2", "--c1sq-lambda",
    "--c2-lambda", "--c1-lambdasq", "--c1-c2z"};

ValidatedThreefold resolve_threefold(CommonInput& in) {
  if (!in.catalog_name.empty()) return catalog_lookup(in.catalog_name);
  if (const Json* doc = in.doc()) {
    if (doc->contains("catalog")) {
      const Json& name = doc->at("catalog");
      if (!name.is_string()) throw InputError("\"catalog\" must be a string");
      return catalog_lookup(name.get<std::string>());
    }
    if (doc->contains("threefold"))
      return validate_threefold(threefold_from_json(doc->at("threefold")));
  }
  throw InputError(
      "no threefold given: pass --catalog NAME or a request file with "
      "\"threefold\" or \"catalog\"");
}

BundleChern resolve_chern(CommonInput& in) {
  std::optional<BundleChern> base;
  if (const Json* doc = in.doc(); doc && doc->contains("chern"))
    base = chern_from_json(doc->at("chern"));

  const std::array<Int BundleChern::*, 6> members = {
      &BundleChern::c1_cubed,    &BundleChern::c1_c2,
      &BundleChern::c1sq_lambda, &BundleChern::c2_lambda,
      &BundleChern::c1_lambdasq, &BundleChern::c1_c2z};

  if (!base) {
    for (std::size_t i = 0; i < 6; ++i)
      if (in.chern_text[i].empty())
        throw InputError(std::string("chern data incomplete: supply \"chern\" in a "
                                     "request file or all six flags (missing ") +
                         kChernFlags[i] + ")");
    base.emplace();
  }
  for (std::size_t i = 0; i < 6; ++i)
    if (!in.chern_text[i].empty())
      (*base).*members[i] = int_flag(in.chern_text[i], kChernFlags[i]);
  return *base;
}

Int resolve_m(CommonInput& in) {
  if (!in.m_text.empty()) return int_flag(in.m_text, "--m");
  if (const Json* doc = in.doc(); doc && doc->contains("m"))
    return parse_int(doc->at("m"));
  throw InputError("twist exponent required: --m or \"m\" in the request file");
}

Spectrum resolve_spectrum(const Json& doc, std::int64_t index) {
  if (doc.is_object() && doc.contains("spectra")) {
    const Json& arr = doc.at("spectra");
    if (!arr.is_array()) throw InputError("\"spectra\" must be an array");
    if (index < 0 || static_cast<std::size_t>(index) >= arr.size())
      throw InputError("spectrum index " + std::to_string(index) +
                       " out of range (file lists " + std::to_string(arr.size()) +
                       ")");
    return spectrum_from_json(arr[static_cast<std::size_t>(index)]);
  }
  return spectrum_from_json(doc);
}

std::pair<std::vector<RankDegreePoint>, RankDegreePoint> resolve_points(
    CommonInput& in) {
  const Json* doc = in.doc();
  if (!doc) throw InputError("--input FILE with \"points\" and \"total\" required");
  if (!doc->contains("total")) throw InputError("request file lacks \"total\"");
  RankDegreePoint total = point_from_json(doc->at("total"));
  std::vector<RankDegreePoint> pts;
  if (doc->contains("points")) pts = points_from_json(doc->at("points"));
  return {std::move(pts), total};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json point_json(const RankDegreePoint& p) {
  return Json::array({int_json(p.rank), int_json(p.degree)});
}

enum class Format { json, csv, table };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw InputError("unknown --format '" + text + "' (json, csv or table)");
}

// ---------------------------------------------------------------------------
// catalog

void run_catalog_list(Format format) {
  std::vector<ThreefoldInvariants> entries;
  for (const auto& name : catalog_names())
    entries.push_back(catalog_lookup(name).invariants());

  switch (format) {
  case Format::json: {
    Json out;
    out["schema"] = 1;
    out["entries"] = Json::array();
    for (const auto& inv : entries) out["entries"].push_back(threefold_to_json(inv));
    emit(out);
    break;
  }
  case Format::csv:
    std::cout << "name,lambda3,lambda_c2Z,dim_L\n";
    for (const auto& inv : entries)
      std::cout << inv.name << "," << inv.lambda3 << "," << inv.lambda_c2z << ","
                << inv.dim_l << "\n";
    break;
  case Format::table:
    std::cout << std::left << std::setw(22) << "name" << std::right << std::setw(9)
              << "lambda3" << std::setw(12) << "lambda_c2Z" << std::setw(7)
              << "dim_L" << "\n";
    for (const auto& inv : entries)
      std::cout << std::left << std::setw(22) << inv.name << std::right
                << std::setw(9) << inv.lambda3 << std::setw(12) << inv.lambda_c2z
                << std::setw(7) << inv.dim_l << "\n";
    break;
  }
}

void run_catalog_show(const std::string& name) {
  Json out;
  out["schema"] = 1;
  out["threefold"] = threefold_to_json(catalog_lookup(name).invariants());
  emit(out);
}

// ---------------------------------------------------------------------------
// chern

void run_chern_slope(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  Json out;
  out["schema"] = 1;
  out["mu"] = rational_json(slope(e, z));
  emit(out);
}

void run_chern_twist(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  Int m = resolve_m(in);
  Json out;
  out["schema"] = 1;
  out["m"] = int_json(m);
  out["chern"] = chern_to_json(twist(e, z, m));
  emit(out);
}

void run_chern_normalize(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  NormalizationResult r = normalize(e, z);
  Json out;
  out["schema"] = 1;
  out["twist_exponent"] = int_json(r.twist_exponent);
  out["mu_normalized"] = rational_json(r.mu_normalized);
  out["chern"] = chern_to_json(r.normalized);
  emit(out);
}

// ---------------------------------------------------------------------------
// rr

void run_rr_chi(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  Json out;
  out["schema"] = 1;
  out["chi"] = rational_json(euler_char_threefold(e, z));
  emit(out);
}

void run_rr_rank(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  Json out;
  out["schema"] = 1;
  out["r"] = int_json(spectrum_rank(e, z));
  out["d"] = int_json(spectrum_degree(e, z));
  emit(out);
}

void run_rr_degree(CommonInput& in) {
  ValidatedThreefold z = resolve_threefold(in);
  BundleChern e = resolve_chern(in);
  Json out;
  out["schema"] = 1;
  out["d"] = int_json(spectrum_degree(e, z));
  emit(out);
}

// ---------------------------------------------------------------------------
// spectrum / cohomology

void run_spectrum_enumerate(std::int64_t r, std::int64_t d,
                            const SpectrumConstraints& constraints,
                            const std::vector<std::int64_t>& window_vals) {
  std::optional<SupportWindow> window;
  if (!window_vals.empty()) window = SupportWindow{window_vals[0], window_vals[1]};

  auto list = enumerate_spectra(r, d, constraints, window);

  Json out;
  out["schema"] = 1;
  out["r"] = r;
  out["d"] = d;
  out["constraints"] = Json{{"connected", constraints.connected},
                            {"symmetric", constraints.symmetric},
                            {"bounds", constraints.use_bounds}};
  if (window) out["window"] = Json::array({window->first, window->second});
  out["count"] = list.size();
  out["spectra"] = Json::array();
  for (const auto& s : list) out["spectra"].push_back(spectrum_to_json(s));
  emit(out);
}

void run_cohomology_table(const std::string& spectrum_path, std::int64_t index,
                          std::int64_t lmin, std::int64_t lmax, Format format) {
  if (lmin > lmax) throw InputError("--lmin must not exceed --lmax");
  Spectrum s = resolve_spectrum(load_json_file(spectrum_path), index);

  struct Row {
    std::int64_t l;
    std::optional<std::int64_t> h1, h2;  // nullopt = outside validity range
  };
  std::vector<Row> rows;
  for (std::int64_t l = lmin; l <= lmax; ++l) {
    Row row{l, std::nullopt, std::nullopt};
    if (l <= 0) row.h1 = h1_value(s, l);
    if (l >= -1) row.h2 = h2_value(s, l);
    rows.push_back(row);
  }

  switch (format) {
  case Format::json: {
    Json out;
    out["schema"] = 1;
    out["spectrum"] = spectrum_to_json(s);
    out["rows"] = Json::array();
    for (const Row& row : rows) {
      Json jr;
      jr["l"] = row.l;
      jr["h1"] = row.h1 ? Json(*row.h1) : Json(nullptr);
      jr["h2"] = row.h2 ? Json(*row.h2) : Json(nullptr);
      out["rows"].push_back(jr);
    }
    emit(out);
    break;
  }
  case Format::csv:
    std::cout << "l,h1,h2\n";
    for (const Row& row : rows) {
      std::cout << row.l << ",";
      if (row.h1) std::cout << *row.h1;
      std::cout << ",";
      if (row.h2) std::cout << *row.h2;
      std::cout << "\n";
    }
    break;
  case Format::table:
    std::cout << std::right << std::setw(6) << "l" << std::setw(8) << "h1"
              << std::setw(8) << "h2" << "\n";
    for (const Row& row : rows) {
      std::cout << std::setw(6) << row.l;
      if (row.h1) std::cout << std::setw(8) << *row.h1; else std::cout << std::setw(8) << "";
      if (row.h2) std::cout << std::setw(8) << *row.h2; else std::cout << std::setw(8) << "";
      std::cout << "\n";
    }
    break;
  }
}

// ---------------------------------------------------------------------------
// gm

CurveFamily resolve_family(CommonInput& in, const std::string& kind,
                           const std::string& normal_degrees,
                           const std::string& dim_l_text,
                           const std::string& mu_max_text) {
  CurveFamily f;
  if (!kind.empty()) {
    if (kind == "rational") {
      f.kind = CurveFamily::Kind::rational_curves;
      if (normal_degrees.empty())
        throw InputError("--normal-degrees required for --kind rational");
      f.normal_degrees = int_list_flag(normal_degrees, "--normal-degrees");
    } else if (kind == "elliptic" || kind == "elliptic_pencil") {
      f.kind = CurveFamily::Kind::elliptic_pencil;
      if (!dim_l_text.empty())
        f.dim_l = int_flag(dim_l_text, "--dim-l");
      else if (!in.catalog_name.empty())
        f.dim_l = catalog_lookup(in.catalog_name).dim_l();
      else
        throw InputError("--dim-l or --catalog required for --kind elliptic_pencil");
    } else {
      throw InputError("unknown family kind '" + kind +
                       "' (rational or elliptic_pencil)");
    }
  } else if (const Json* doc = in.doc()) {
    f = family_from_json(doc->contains("family") ? doc->at("family") : *doc);
  } else {
    throw InputError("family description required: --kind ... or --input FILE");
  }
  if (!mu_max_text.empty())
    f.mu_max_override = rational_flag(mu_max_text, "--mu-max");
  return f;
}

void run_gm_d_invariant(const CurveFamily& f) {
  Json out;
  out["schema"] = 1;
  out["dW"] = rational_json(f.d_invariant());
  if (f.mu_max_override) out["mu_max_override"] = true;
  emit(out);
}

void run_gm_splittings(std::int64_t rank, const Int& delta) {
  auto types = splitting_types_rational(rank, delta);
  Json out;
  out["schema"] = 1;
  out["rank"] = rank;
  out["delta"] = int_json(delta);
  out["count"] = types.size();
  out["types"] = Json::array();
  for (const auto& t : types) {
    Json jt = Json::array();
    for (const auto& a : t) jt.push_back(int_json(a));
    out["types"].push_back(jt);
  }
  emit(out);
}

void run_gm_elliptic_restriction(const Int& delta) {
  EllipticRestriction r = restriction_types_elliptic(delta);
  Json out;
  out["schema"] = 1;
  out["delta"] = int_json(delta);
  out["split"] = Json::array({int_json(r.split[0]), int_json(r.split[1])});
  out["semistable_alternative"] = r.semistable_alternative_allowed;
  emit(out);
}

// ---------------------------------------------------------------------------
// hnp

void run_hnp_hull(CommonInput& in) {
  auto [pts, total] = resolve_points(in);
  HNPolygon hull = hnp_from_points(pts, total);
  Json out;
  out["schema"] = 1;
  out["total"] = point_json(total);
  out["vertices"] = points_to_json(hull.vertices());
  out["slopes"] = Json::array();
  for (const auto& slope : slopes(hull)) out["slopes"].push_back(rational_json(slope));
  emit(out);
}

void run_hnp_compare(CommonInput& in) {
  const Json* doc = in.doc();
  if (!doc) throw InputError("--input FILE with polygons \"p\" and \"q\" required");
  if (!doc->contains("p") || !doc->contains("q"))
    throw InputError("request file must contain polygons \"p\" and \"q\"");
  HNPolygon p = polygon_from_json(doc->at("p"));
  HNPolygon q = polygon_from_json(doc->at("q"));
  Json out;
  out["schema"] = 1;
  out["p_geq_q"] = polygon_geq(p, q);
  out["q_geq_p"] = polygon_geq(q, p);
  emit(out);
}

void run_hnp_semistable(CommonInput& in) {
  auto [pts, total] = resolve_points(in);
  Json out;
  out["schema"] = 1;
  out["semistable"] = is_semistable_profile(pts, total);
  emit(out);
}

void add_request_flags(CLI::App* cmd, CommonInput& in, bool with_chern,
                       bool with_m = false) {
  cmd->add_option("--input", in.input_path, "JSON request file");
  cmd->add_option("--catalog", in.catalog_name, "catalog entry name");
  if (with_chern)
    for (std::size_t i = 0; i < 6; ++i)
      cmd->add_option(kChernFlags[i], in.chern_text[i],
                      "chern pairing (integer, overrides the request file)");
  if (with_m) cmd->add_option("--m", in.m_text, "twist exponent");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic toolkit for rank-2 bundle spectra, slope polygons and "
      "restriction splitting types"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "specbundle 0.1.0");

  CommonInput in;
  std::function<void()> action;

  // catalog ------------------------------------------------------------
  auto* catalog = app.add_subcommand("catalog", "built-in threefold invariants");
  catalog->require_subcommand(1);
  auto cat_format = std::make_shared<std::string>("json");
  auto* cat_list = catalog->add_subcommand("list", "list all entries");
  cat_list->add_option("--format", *cat_format, "json, csv or table");
  cat_list->callback([&, cat_format] {
    action = [cat_format] { run_catalog_list(parse_format(*cat_format)); };
  });
  auto cat_name = std::make_shared<std::string>();
  auto* cat_show = catalog->add_subcommand("show", "show one entry");
  cat_show->add_option("name", *cat_name, "entry name")->required();
  cat_show->callback([&, cat_name] {
    action = [cat_name] { run_catalog_show(*cat_name); };
  });

  // chern --------------------------------------------------------------
  auto* chern = app.add_subcommand("chern", "twist, normalize and slope of chern data");
  chern->require_subcommand(1);
  auto* chern_twist = chern->add_subcommand("twist", "chern data of E tensor L^m");
  add_request_flags(chern_twist, in, true, true);
  chern_twist->callback([&] { action = [&] { run_chern_twist(in); }; });
  auto* chern_norm = chern->add_subcommand("normalize", "twist into the slope window");
  add_request_flags(chern_norm, in, true);
  chern_norm->callback([&] { action = [&] { run_chern_normalize(in); }; });
  auto* chern_slope = chern->add_subcommand("slope", "slope mu(E)");
  add_request_flags(chern_slope, in, true);
  chern_slope->callback([&] { action = [&] { run_chern_slope(in); }; });

  // rr -----------------------------------------------------------------
  auto* rr = app.add_subcommand("rr", "Riemann-Roch invariants");
  rr->require_subcommand(1);
  auto* rr_chi = rr->add_subcommand("chi", "Euler characteristic chi(E)");
  add_request_flags(rr_chi, in, true);
  rr_chi->callback([&] { action = [&] { run_rr_chi(in); }; });
  auto* rr_rank = rr->add_subcommand("rank", "spectrum rank r and degree d");
  add_request_flags(rr_rank, in, true);
  rr_rank->callback([&] { action = [&] { run_rr_rank(in); }; });
  auto* rr_degree = rr->add_subcommand("degree", "spectrum degree d only");
  add_request_flags(rr_degree, in, true);
  rr_degree->callback([&] { action = [&] { run_rr_degree(in); }; });

  // spectrum -----------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "spectrum enumeration");
  spectrum->require_subcommand(1);
  auto* enumerate = spectrum->add_subcommand("enumerate", "all admissible spectra");
  auto enum_r = std::make_shared<std::int64_t>(0);
  auto enum_d = std::make_shared<std::int64_t>(0);
  auto enum_constraints = std::make_shared<SpectrumConstraints>();
  auto enum_window = std::make_shared<std::vector<std::int64_t>>();
  enumerate->add_option("--r", *enum_r, "spectrum rank")->required();
  enumerate->add_option("--d", *enum_d, "spectrum degree")->required();
  enumerate->add_flag("--connected", enum_constraints->connected,
                      "impose the no-gap conditions");
  enumerate->add_flag("--symmetric", enum_constraints->symmetric,
                      "self-mirrored gap-free spectra only");
  enumerate->add_flag("--bounds", enum_constraints->use_bounds,
                      "restrict indices to the rank/degree window");
  enumerate->add_option("--window", *enum_window, "explicit support window LO HI")
      ->expected(2);
  enumerate->callback([&, enum_r, enum_d, enum_constraints, enum_window] {
    action = [enum_r, enum_d, enum_constraints, enum_window] {
      run_spectrum_enumerate(*enum_r, *enum_d, *enum_constraints, *enum_window);
    };
  });

  // cohomology ----------------------------------------------------------
  auto* cohomology = app.add_subcommand("cohomology", "h1/h2 tables from a spectrum");
  cohomology->require_subcommand(1);
  auto* table = cohomology->add_subcommand("table", "tabulate h1 and h2 over twists");
  auto tbl_spectrum = std::make_shared<std::string>();
  auto tbl_index = std::make_shared<std::int64_t>(0);
  auto tbl_lmin = std::make_shared<std::int64_t>(0);
  auto tbl_lmax = std::make_shared<std::int64_t>(0);
  auto tbl_format = std::make_shared<std::string>("json");
  table->add_option("--spectrum", *tbl_spectrum,
                    "spectrum file (enumerate output or bare multiplicities)")
      ->required();
  table->add_option("--index", *tbl_index, "which entry of a spectra list");
  table->add_option("--lmin", *tbl_lmin, "first twist")->required();
  table->add_option("--lmax", *tbl_lmax, "last twist")->required();
  table->add_option("--format", *tbl_format, "json, csv or table");
  table->callback([&, tbl_spectrum, tbl_index, tbl_lmin, tbl_lmax, tbl_format] {
    action = [tbl_spectrum, tbl_index, tbl_lmin, tbl_lmax, tbl_format] {
      run_cohomology_table(*tbl_spectrum, *tbl_index, *tbl_lmin, *tbl_lmax,
                           parse_format(*tbl_format));
    };
  });

  // gm -------------------------------------------------------------------
  auto* gm = app.add_subcommand("gm", "restriction invariants of curve families");
  gm->require_subcommand(1);
  auto* dinv = gm->add_subcommand("d-invariant", "d(W) of a curve family");
  auto gm_kind = std::make_shared<std::string>();
  auto gm_degrees = std::make_shared<std::string>();
  auto gm_dim_l = std::make_shared<std::string>();
  auto gm_mu_max = std::make_shared<std::string>();
  dinv->add_option("--kind", *gm_kind, "rational or elliptic_pencil");
  dinv->add_option("--normal-degrees", *gm_degrees,
                   "normal bundle degrees, comma separated");
  dinv->add_option("--dim-l", *gm_dim_l, "dim |L| for an elliptic pencil");
  dinv->add_option("--mu-max", *gm_mu_max, "expert override for mu_max");
  dinv->add_option("--input", in.input_path, "JSON family file");
  dinv->add_option("--catalog", in.catalog_name, "catalog entry for dim |L|");
  dinv->callback([&, gm_kind, gm_degrees, gm_dim_l, gm_mu_max] {
    action = [&, gm_kind, gm_degrees, gm_dim_l, gm_mu_max] {
      run_gm_d_invariant(
          resolve_family(in, *gm_kind, *gm_degrees, *gm_dim_l, *gm_mu_max));
    };
  });
  auto* splittings = gm->add_subcommand("splittings", "admissible splitting types");
  auto split_rank = std::make_shared<std::int64_t>(0);
  auto split_delta = std::make_shared<std::string>();
  splittings->add_option("--rank", *split_rank, "restriction rank")->required();
  splittings->add_option("--delta", *split_delta, "total degree")->required();
  splittings->callback([&, split_rank, split_delta] {
    action = [split_rank, split_delta] {
      run_gm_splittings(*split_rank, int_flag(*split_delta, "--delta"));
    };
  });
  auto* elliptic = gm->add_subcommand("elliptic-restriction",
                                      "restriction alternatives on elliptic curves");
  auto ell_delta = std::make_shared<std::string>();
  elliptic->add_option("--delta", *ell_delta, "total degree")->required();
  elliptic->callback([&, ell_delta] {
    action = [ell_delta] {
      run_gm_elliptic_restriction(int_flag(*ell_delta, "--delta"));
    };
  });

  // hnp --------------------------------------------------------------------
  auto* hnp = app.add_subcommand("hnp", "Harder-Narasimhan polygons");
  hnp->require_subcommand(1);
  auto* hull = hnp->add_subcommand("hull", "upper hull of evidence points");
  hull->add_option("--input", in.input_path, "JSON file with points and total")
      ->required();
  hull->callback([&] { action = [&] { run_hnp_hull(in); }; });
  auto* compare = hnp->add_subcommand("compare", "pointwise order of two polygons");
  compare->add_option("--input", in.input_path, "JSON file with polygons p and q")
      ->required();
  compare->callback([&] { action = [&] { run_hnp_compare(in); }; });
  auto* semistable = hnp->add_subcommand("semistable", "single-edge test");
  semistable->add_option("--input", in.input_path, "JSON file with points and total")
      ->required();
  semistable->callback([&] { action = [&] { run_hnp_semistable(in); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "InputError: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 1;
  }

  try {
    if (action) action();
  } catch (const DomainError& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "InputError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
