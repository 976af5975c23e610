#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "eaforge/constructions.hpp"

// CLI request plumbing. run_command is the single entry point; it maps
// forge_error codes onto the scriptable exit codes (0 success, 2 validation,
// 3 claim/verification mismatch, 4 budget exceeded).

namespace eaforge {

struct CommandRequest {
  std::string subcommand;
  std::string input_path;
  std::string construction;
  std::string table;
  std::string form = "euclidean";
  std::optional<int> c;
  std::optional<int> s;
  std::optional<int> q;
  std::optional<int> r;
  std::optional<int> k;
  long long budget = default_distance_budget;
  std::string mode = "strict";
  long long seed = 0;
  std::string output_path;
};

namespace detail {

inline Form parse_form(const std::string& s) {
  if (s == "euclidean") return Form::euclidean;
  if (s == "hermitian") return Form::hermitian;
  fail(errc::parse_error, "form must be euclidean or hermitian, got '" + s + "'");
}

inline int require_flag(const std::optional<int>& v, const char* flag) {
  if (!v) fail(errc::parse_error, std::string("missing required flag --") + flag);
  return *v;
}

inline int get_int(const json& j, const char* key, const std::string& where) {
  return require_int(require_key(j, key, where.c_str()), key);
}

inline std::string get_str(const json& j, const char* key, const std::string& where) {
  return require_string(require_key(j, key, where.c_str()), key);
}

inline bool get_bool(const json& j, const char* key, const std::string& where) {
  const json& v = require_key(j, key, where.c_str());
  if (!v.is_boolean()) fail(errc::parse_error, where + ": \"" + key + "\" must be a boolean");
  return v.get<bool>();
}

inline void emit(const CommandRequest& req, std::ostream& out, const std::string& text) {
  if (req.output_path.empty())
    out << text;
  else
    write_text_file(req.output_path, text);
}

}  // namespace detail

inline ConstructionReport derive_report(const LinearCode& code, Form form, long long budget) {
  if (form == Form::hermitian && !code.f->quadratic())
    fail(errc::not_quadratic_extension, "hermitian derivation needs a GF(q^2) field");
  auto [primary, derived] = eaqecc_from_hull(code, form, budget);
  ConstructionReport rep;
  rep.construction = "derive";
  rep.input = code_to_json(code);
  rep.params = json{{"budget", budget}, {"form", form_name(form)}};
  rep.witnesses = json::object();
  rep.output_code = code_to_json(code);
  rep.primary = primary;
  rep.dual_derived = derived;
  rep.claims.push_back(make_claim("primary.c", gram_rank(code.par, form), primary.c));
  rep.claims.push_back(make_claim("dual_derived.c", gram_rank(code.gen, form), derived.c));
  rep.code = code;
  return rep;
}

namespace detail {

inline int finish_report(const CommandRequest& req, std::ostream& out,
                         const ConstructionReport& rep) {
  emit(req, out, dump_json(report_to_json(rep)));
  if (req.mode == "strict" && !rep.strict_ok()) return 3;
  return 0;
}

inline int cmd_code_info(const CommandRequest& req, std::ostream& out) {
  LinearCode code = code_from_json(load_json_file(req.input_path));
  Form form = parse_form(req.form);
  if (form == Form::hermitian && !code.f->quadratic())
    fail(errc::not_quadratic_extension, "hermitian info needs a GF(q^2) field");
  std::string dstr;
  std::string note;
  try {
    int d = min_distance(code, req.budget);
    dstr = d == distance_undefined ? "undefined" : std::to_string(d);
  } catch (const budget_exceeded& b) {
    dstr = "unknown";
    note = "note: distance enumeration exceeded budget; d lies in [" +
           std::to_string(b.lower()) + ", " + std::to_string(b.upper()) + "]\n";
  }
  std::ostringstream line;
  line << "n=" << code.n << " k=" << code.k << " d=" << dstr << " hull_e="
       << hull_dim(code, Form::euclidean);
  if (code.f->quadratic()) line << " hull_h=" << hull_dim(code, Form::hermitian);
  if (is_dual_containing(code, form)) line << " dual_containing=true";
  line << " lcd=" << (is_lcd(code, form) ? "true" : "false") << "\n";
  emit(req, out, line.str() + note);
  return 0;
}

inline int cmd_derive(const CommandRequest& req, std::ostream& out) {
  LinearCode code = code_from_json(load_json_file(req.input_path));
  return finish_report(req, out, derive_report(code, parse_form(req.form), req.budget));
}

inline int cmd_construct(const CommandRequest& req, std::ostream& out) {
  const std::string& name = req.construction;
  ConstructionReport rep;
  if (name == "extend-e-multi" || name == "extend-e-single" || name == "extend-h-multi" ||
      name == "extend-h-single") {
    LinearCode code = code_from_json(load_json_file(req.input_path));
    int count = require_flag(req.c, "c");
    if (name == "extend-e-multi")
      rep = extend_euclidean_multi(code, count, req.budget);
    else if (name == "extend-h-multi")
      rep = extend_hermitian_multi(code, count, req.budget);
    else if (name == "extend-e-single")
      rep = extend_euclidean_single(code, count, req.budget);
    else
      rep = extend_hermitian_single(code, count, req.budget);
  } else if (name == "grs-mds") {
    GrsSpec spec = grs_from_json(load_json_file(req.input_path));
    rep = grs_mds_extend(spec, req.budget);
  } else if (name == "grs-hull") {
    int q = require_flag(req.q, "q");
    int r = require_flag(req.r, "r");
    int extra = req.c.value_or(0);
    if (extra != 0 && extra != 1)
      fail(errc::parse_error, "grs-hull takes --c 0|1 (extra evaluation point)");
    rep = grs_hull_report(q, r, extra == 1);
  } else if (name == "lcd-maximal") {
    LinearCode code = code_from_json(load_json_file(req.input_path));
    rep = lcd_maximal_report(code, req.budget);
  } else if (name == "cyclic-mds-lcd") {
    rep = cyclic_mds_lcd(require_flag(req.q, "q"), require_flag(req.k, "k"), req.budget);
  } else if (name == "lcd-expand") {
    LinearCode code = code_from_json(load_json_file(req.input_path));
    rep = lcd_s_expand(code, require_flag(req.s, "s"), req.budget);
  } else {
    fail(errc::unknown_construction, "no construction named '" + name + "'");
  }
  return finish_report(req, out, rep);
}

inline Form report_form(const json& rep, const std::string& construction) {
  if (construction == "extend-h-multi" || construction == "extend-h-single" ||
      construction == "grs-mds")
    return Form::hermitian;
  if (construction == "derive")
    return parse_form(get_str(rep.at("params"), "form", "params"));
  return Form::euclidean;
}

inline void check_eaqecc_block(const json& block, const std::string& prefix,
                               const LinearCode& stored, Form form, int expected_k,
                               int expected_c) {
  const Field& f = *stored.f;
  int expected_q = form == Form::hermitian ? f.base_order() : f.q();
  if (get_int(block, "q", prefix) != expected_q) fail(errc::verification_failed, prefix + ".q");
  if (get_int(block, "n", prefix) != stored.n) fail(errc::verification_failed, prefix + ".n");
  if (get_int(block, "k", prefix) != expected_k) fail(errc::verification_failed, prefix + ".k");
  if (get_int(block, "c", prefix) != expected_c) fail(errc::verification_failed, prefix + ".c");
}

inline void check_eaqecc_distance(const json& block, const std::string& prefix,
                                  const LinearCode& code, long long budget) {
  try {
    if (get_int(block, "d", prefix) != min_distance(code, budget))
      fail(errc::verification_failed, prefix + ".d");
  } catch (const budget_exceeded&) {
  }
}

// Phase 1 of verification: recompute ranks, hulls, and distances from the
// stored matrices and compare against the report's parameter blocks.
inline void verify_direct(const json& rep, long long budget) {
  const std::string construction = get_str(rep, "construction", "report");
  if (!rep.contains("output_code")) return;
  LinearCode stored = code_from_json(rep.at("output_code"));
  Form form = report_form(rep, construction);
  int c_direct = gram_rank(stored.par, form);

  if (rep.contains("eaqecc")) {
    int expected_k;
    if (construction == "extend-e-multi" || construction == "extend-e-single" ||
        construction == "extend-h-multi" || construction == "extend-h-single")
      expected_k = 2 * stored.k - stored.n + c_direct;
    else if (construction == "lcd-expand")
      expected_k = stored.k;
    else
      expected_k = gram_rank(stored.gen, form);
    check_eaqecc_block(rep.at("eaqecc"), "eaqecc", stored, form, expected_k, c_direct);
    check_eaqecc_distance(rep.at("eaqecc"), "eaqecc", stored, budget);
  }
  if (rep.contains("dual_derived")) {
    int k_dd = c_direct;
    int c_dd = gram_rank(stored.gen, form);
    check_eaqecc_block(rep.at("dual_derived"), "dual_derived", stored, form, k_dd, c_dd);
    LinearCode dd = form == Form::euclidean ? dual(stored) : hermitian_dual(stored);
    check_eaqecc_distance(rep.at("dual_derived"), "dual_derived", dd, budget);
  }
}

// Phase 2: deterministically rebuild the report from its recorded input and
// parameters, then deep-compare; the first divergent path is the failure.
inline ConstructionReport rebuild_report(const json& rep) {
  const std::string construction = get_str(rep, "construction", "report");
  const json& input = rep.at("input");
  const json& params = rep.at("params");
  long long budget = params.contains("budget")
                         ? params.at("budget").get<long long>()
                         : default_distance_budget;
  if (construction == "derive")
    return derive_report(code_from_json(input), parse_form(get_str(params, "form", "params")),
                         budget);
  if (construction == "extend-e-multi")
    return extend_euclidean_multi(code_from_json(input), get_int(params, "c", "params"), budget);
  if (construction == "extend-h-multi")
    return extend_hermitian_multi(code_from_json(input), get_int(params, "c", "params"), budget);
  if (construction == "extend-e-single")
    return extend_euclidean_single(code_from_json(input), get_int(params, "c", "params"), budget);
  if (construction == "extend-h-single")
    return extend_hermitian_single(code_from_json(input), get_int(params, "c", "params"), budget);
  if (construction == "grs-mds") return grs_mds_extend(grs_from_json(input), budget);
  if (construction == "grs-hull")
    return grs_hull_report(get_int(input, "q", "input"), get_int(input, "r", "input"),
                           get_bool(input, "extra", "input"));
  if (construction == "lcd-maximal") return lcd_maximal_report(code_from_json(input), budget);
  if (construction == "cyclic-mds-lcd")
    return cyclic_mds_lcd(get_int(input, "q", "input"), get_int(input, "k", "input"), budget);
  if (construction == "lcd-expand")
    return lcd_s_expand(code_from_json(input), get_int(params, "s", "params"), budget);
  fail(errc::parse_error, "report names unknown construction '" + construction + "'");
}

inline void verify_report_json(const json& rep, long long budget) {
  verify_direct(rep, budget);
  json rebuilt = report_to_json(rebuild_report(rep));
  if (auto div = first_divergence(rep, rebuilt)) fail(errc::verification_failed, *div);
}

inline int cmd_verify(const CommandRequest& req, std::ostream& out) {
  verify_report_json(load_json_file(req.input_path), req.budget);
  out << "verified\n";
  return 0;
}

inline int cmd_tabulate(const CommandRequest& req, std::ostream& out) {
  if (req.table != "mds-grs") fail(errc::parse_error, "unknown table '" + req.table + "'");
  int q = require_flag(req.q, "q");
  using Row = std::tuple<int, int, int, int, bool, bool, std::string>;
  std::set<Row> rows;
  auto add = [&rows](const EaqeccParams& p, const std::string& source) {
    rows.insert(Row{p.n, p.k, p.d, p.c, p.singleton == Singleton::mds, p.maximal, source});
  };

  for (int r = 1; r <= q + 1; ++r) {
    if (std::gcd(r, q) != 1) continue;
    for (int extra = 0; extra <= 1; ++extra) {
      ConstructionReport rep = grs_hull_report(q, r, extra == 1);
      verify_report_json(report_to_json(rep), req.budget);
      GrsHullFamily fam = grs_hull_family(q, r, extra == 1);
      for (const auto& row : fam.rows) {
        if (row.primary) add(*row.primary, "grs-hull");
        if (row.dual_derived) add(*row.dual_derived, "grs-hull");
      }
    }
  }

  auto run_mds = [&](const GrsSpec& spec) {
    ConstructionReport rep = grs_mds_extend(spec, req.budget);
    verify_report_json(report_to_json(rep), req.budget);
    if (rep.primary) add(*rep.primary, "grs-mds");
    if (rep.dual_derived) add(*rep.dual_derived, "grs-mds");
  };

  auto split = prime_power_split(q);
  if (!split || q <= 2) fail(errc::parse_error, "q must be a prime power greater than 2");
  const Field& f2 = Field::get(split->first, 2 * split->second);
  int w2 = f2.primitive();
  int order = f2.q() - 1;
  for (int n = 2; n <= order; ++n) {
    if (order % n != 0 || std::gcd(n, q) != 1) continue;
    int eta = f2.pow(w2, order / n);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = f2.pow(eta, i);
    int k_lo = std::max((n + 1) / 2, n - 3);
    for (int k = k_lo; k <= n - 1; ++k) {
      for (int tau = 0; tau < n; ++tau) {
        std::vector<int> gamma(n);
        for (int i = 0; i < n; ++i) gamma[i] = f2.pow(w[i], tau);
        GrsSpec spec{&f2, k, gamma, w};
        if (hull_dim(grs_code(spec), Form::hermitian) != n - k) continue;
        run_mds(spec);
        break;
      }
    }
  }

  if (q == 3) {
    const Field& f9 = Field::get(3, 2);
    GrsSpec eps{&f9, 6, {1, 1, 1, 1, 4, 4, 4, 4}, {1, 2, 4, 8, 6, 3, 7, 5}};
    run_mds(eps);
  }

  std::ostringstream csv;
  csv << "q,n,k,d,c,mds,maximal,source_construction\n";
  for (const auto& row : rows)
    csv << q << "," << std::get<0>(row) << "," << std::get<1>(row) << "," << std::get<2>(row)
        << "," << std::get<3>(row) << "," << (std::get<4>(row) ? "true" : "false") << ","
        << (std::get<5>(row) ? "true" : "false") << "," << std::get<6>(row) << "\n";
  emit(req, out, csv.str());
  return 0;
}

}  // namespace detail

inline int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.budget < 10000) fail(errc::parse_error, "budget must be at least 10000");
    if (req.subcommand == "code-info") return detail::cmd_code_info(req, out);
    if (req.subcommand == "derive") return detail::cmd_derive(req, out);
    if (req.subcommand == "construct") return detail::cmd_construct(req, out);
    if (req.subcommand == "verify") return detail::cmd_verify(req, out);
    if (req.subcommand == "tabulate") return detail::cmd_tabulate(req, out);
    fail(errc::parse_error, "unknown subcommand '" + req.subcommand + "'");
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const forge_error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::verification_failed ? 3 : 2;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eaforge
