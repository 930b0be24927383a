#include "fermatlines/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "fermatlines/certify.hpp"
#include "fermatlines/charsum.hpp"
#include "fermatlines/efield.hpp"
#include "fermatlines/errors.hpp"
#include "fermatlines/fermat.hpp"
#include "fermatlines/report.hpp"

namespace fermatlines::cli {

namespace {

using gf::FieldCtx;
using gf::FqElem;
using report::Json;

constexpr std::uint64_t kSmallCap = 100'000;

struct Config {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string format = "pretty";
  bool extended = false;
  unsigned threads = 1;

  std::string c;
  std::string tuple;
  bool c_notin_fq = false;
  std::uint32_t order = 0;
  std::string a;
  std::string b;
  bool thm1 = false;
  std::optional<std::int64_t> translate;
};

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer list: '" + s + "'");
    }
  }
  if (out.empty()) throw PreconditionError("empty integer list");
  return out;
}

FqElem parse_elem(const FieldCtx& ctx, const std::string& s) {
  const auto v = parse_ints(s);
  return ctx.from_coeffs(v);
}

charsum::ExponentTuple parse_tuple(const FieldCtx& ctx, const std::string& s) {
  const auto v = parse_ints(s);
  if (v.size() != 4) throw PreconditionError("tuple needs 4 entries, got " + std::to_string(v.size()));
  return charsum::ExponentTuple::make(ctx.d(), v[0], v[1], v[2], v[3]);
}

std::string tuple_text(const charsum::ExponentTuple& t) {
  return "(" + std::to_string(t.i[0]) + "," + std::to_string(t.i[1]) + "," + std::to_string(t.i[2]) + "," +
         std::to_string(t.i[3]) + ")";
}

std::string coords_text(const FieldCtx& ctx, FqElem x) {
  std::string out;
  for (std::uint32_t c : ctx.coeffs(x)) out += (out.empty() ? "" : ";") + std::to_string(c);
  return out;
}

FieldCtx make_field(const Config& cfg) {
  return FieldCtx::make(cfg.p, cfg.k, cfg.extended ? gf::kDefaultSizeCap : kSmallCap);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_charsum(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  FqElem c;
  if (cfg.c_notin_fq) c = ctx.generator();
  else if (cfg.c.empty()) throw PreconditionError("charsum needs --c");
  else c = parse_elem(ctx, cfg.c);
  if (!ctx.in_subfield(c)) throw PreconditionError("c must lie in F_q");
  if (cfg.tuple.empty()) throw PreconditionError("charsum needs --tuple");
  const auto rec = charsum::sum_S(ctx, c, parse_tuple(ctx, cfg.tuple));
  if (cfg.format == "json") {
    emit_json(out, report::sum_record_json(ctx, rec));
  } else if (cfg.format == "csv") {
    const std::size_t w = rec.value.canon().size();
    std::vector<std::string> head{"q", "c", "i0", "i1", "i2", "i3", "as_integer", "is_real"};
    auto vh = report::coeff_headers("v", w);
    head.insert(head.end(), vh.begin(), vh.end());
    out << report::csv_line(head);
    std::vector<std::string> row{std::to_string(ctx.q()), coords_text(ctx, c)};
    for (auto i : rec.tuple.i) row.push_back(std::to_string(i));
    row.push_back(rec.as_integer ? std::to_string(*rec.as_integer) : "");
    row.push_back(rec.value.is_real() ? "true" : "false");
    auto vc = report::cyc_cells(rec.value, w);
    row.insert(row.end(), vc.begin(), vc.end());
    out << report::csv_line(row);
  } else {
    out << "S_{c," << tuple_text(rec.tuple) << "} over F_" << ctx.q() << "^2 with c = "
        << report::pretty_elem(ctx, c) << "\n";
    out << "value = " << report::pretty_cyc(rec.value) << "  (z = zeta_" << ctx.d() << ")\n";
    out << "real: " << (rec.value.is_real() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_survey(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  if (cfg.order == 0) throw PreconditionError("survey needs --order");
  const auto s = charsum::survey_N(ctx, cfg.order, cfg.threads);
  if (cfg.format == "json") {
    emit_json(out, report::survey_json(ctx, s));
  } else if (cfg.format == "csv") {
    const std::size_t w = cyc::euler_phi(ctx.d());
    std::vector<std::string> head{"q", "order", "c", "as_integer", "hit_upper", "hit_lower"};
    auto vh = report::coeff_headers("v", w);
    head.insert(head.end(), vh.begin(), vh.end());
    out << report::csv_line(head);
    for (const auto& r : s.rows) {
      std::vector<std::string> row{std::to_string(ctx.q()), std::to_string(s.order), coords_text(ctx, r.c),
                                   r.as_integer ? std::to_string(*r.as_integer) : "",
                                   r.hit_upper ? "true" : "false", r.hit_lower ? "true" : "false"};
      auto vc = report::cyc_cells(r.value, w);
      row.insert(row.end(), vc.begin(), vc.end());
      out << report::csv_line(row);
    }
  } else {
    auto list = [&](const std::vector<FqElem>& cs) {
      std::string t;
      for (FqElem c : cs) t += " " + report::pretty_elem(ctx, c);
      return t.empty() ? std::string(" (none)") : t;
    };
    out << "q = " << ctx.q() << ", order " << s.order << "\n";
    out << "N = " << s.n_upper << "  (bound (3q-9)/4 = " << s.bound_numerator << "/4)\n";
    out << "hits (S = 2q):" << list(s.hits) << "\n";
    out << "misses (S = -2q):" << list(s.lower_hits) << "\n";
    out << "within bound: " << (s.within_bound() ? "yes" : "no") << "\n";
  }
  return s.within_bound() ? kExitOk : kExitInvariant;
}

std::vector<fermat::Line> selected_lines(const FieldCtx& ctx, const Config& cfg) {
  if (cfg.thm1) {
    return {certify::mod3_line(ctx)};
  }
  if (!cfg.a.empty() || !cfg.b.empty()) {
    if (cfg.a.empty() || cfg.b.empty()) throw PreconditionError("--a and --b go together");
    return {fermat::Line::make(ctx, parse_elem(ctx, cfg.a), parse_elem(ctx, cfg.b))};
  }
  return {};
}

int cmd_lines(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  auto lines = selected_lines(ctx, cfg);
  if (lines.empty()) {
    for (const auto& [a, b] : ctx.find_ab_pairs()) lines.push_back(fermat::Line::make(ctx, a, b));
  }
  const auto tuples =
      cfg.tuple.empty() ? fermat::w_tuples(ctx.d()) : std::vector{parse_tuple(ctx, cfg.tuple)};
  std::vector<report::LineRow> rows;
  for (const auto& L : lines) {
    const auto I = fermat::build_intersections(ctx, L);
    for (const auto& t : tuples) {
      report::LineRow row{L, t, std::nullopt, fermat::inner_product_direct(ctx, I, t)};
      if (t.all_nonzero()) {
        const auto via = fermat::inner_product_via_charsum(ctx, L, t);
        if (!(via.numerator == row.inner.numerator) || via.denominator != row.inner.denominator) {
          throw InvariantError("inner product routes disagree at tuple " + tuple_text(t));
        }
        row.S = charsum::sum_S(ctx, ctx.mul(L.b, L.b), t).value;
      }
      rows.push_back(std::move(row));
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["schema"] = report::kSchema;
    j["p"] = ctx.p();
    j["k"] = ctx.k();
    j["q"] = ctx.q();
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(report::line_row_json(ctx, r));
    j["rows"] = std::move(arr);
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    const std::size_t w = cyc::euler_phi(ctx.d());
    std::vector<std::string> head{"q", "a", "b", "i0", "i1", "i2", "i3", "nonzero", "den"};
    auto nh = report::coeff_headers("num", w);
    head.insert(head.end(), nh.begin(), nh.end());
    out << report::csv_line(head);
    for (const auto& r : rows) {
      std::vector<std::string> row{std::to_string(ctx.q()), coords_text(ctx, r.line.a), coords_text(ctx, r.line.b)};
      for (auto i : r.tuple.i) row.push_back(std::to_string(i));
      row.push_back(r.inner.is_zero() ? "false" : "true");
      row.push_back(std::to_string(r.inner.denominator));
      auto nc = report::cyc_cells(r.inner.numerator, w);
      row.insert(row.end(), nc.begin(), nc.end());
      out << report::csv_line(row);
    }
  } else {
    for (const auto& r : rows) {
      out << "a = " << report::pretty_elem(ctx, r.line.a) << ", b = " << report::pretty_elem(ctx, r.line.b)
          << ", tuple " << tuple_text(r.tuple) << ": <v,v> = (" << report::pretty_cyc(r.inner.numerator) << ")/"
          << r.inner.denominator << (r.inner.is_zero() ? "  zero" : "  nonzero") << "\n";
    }
  }
  return kExitOk;
}

int cmd_point(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const auto lines = selected_lines(ctx, cfg);
  if (lines.empty()) throw PreconditionError("point needs --thm1 or --a and --b");
  const auto& L = lines.front();
  const auto pc = efield::construct_point(ctx, L);
  efield::CurvePoint P = pc.point;
  if (cfg.translate) P = efield::mu_d_translate(ctx, P, ctx.mu_d_element(*cfg.translate));
  const bool ok = efield::on_curve(ctx, P);
  if (cfg.format == "json") {
    Json j = report::point_json(ctx, P);
    Json line;
    line["a"] = report::elem_json(ctx, L.a);
    line["b"] = report::elem_json(ctx, L.b);
    j["line"] = std::move(line);
    j["translate"] = cfg.translate ? Json(*cfg.translate) : Json(nullptr);
    j["galois"] = pc.galois;
    j["on_curve"] = ok;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << report::csv_line({"coord", "part", "degree", "coeff"});
    if (P) {
      for (const auto& [name, f] : {std::pair{"x", &P->first}, std::pair{"y", &P->second}}) {
        for (const auto& [part, poly] : {std::pair{"num", &f->num}, std::pair{"den", &f->den}}) {
          for (std::size_t e = 0; e < poly->size(); ++e) {
            out << report::csv_line({name, part, std::to_string(e), coords_text(ctx, (*poly)[e])});
          }
        }
      }
    }
  } else {
    out << "line a = " << report::pretty_elem(ctx, L.a) << ", b = " << report::pretty_elem(ctx, L.b);
    if (cfg.translate) out << ", translated by g_d^" << *cfg.translate;
    out << "\n";
    if (!P) {
      out << "P = O\n";
    } else {
      out << "P_x = " << report::pretty_ratfunc(ctx, P->first) << "\n";
      out << "P_y = " << report::pretty_ratfunc(ctx, P->second) << "\n";
    }
    out << "on curve: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitInvariant;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const auto c = certify::certify(ctx, cfg.threads);
  if (cfg.format == "json") {
    emit_json(out, report::certificate_json(ctx, c));
  } else if (cfg.format == "csv") {
    const std::size_t w = cyc::euler_phi(ctx.d());
    std::vector<std::string> head{"q", "i0", "i1", "i2", "i3", "c", "nonzero"};
    auto sh = report::coeff_headers("S", w);
    head.insert(head.end(), sh.begin(), sh.end());
    out << report::csv_line(head);
    for (const auto& cov : c.coverage) {
      std::vector<std::string> row{std::to_string(ctx.q())};
      for (auto i : cov.tuple.i) row.push_back(std::to_string(i));
      row.push_back(cov.c ? coords_text(ctx, *cov.c) : "");
      row.push_back(cov.nonzero ? "true" : "false");
      if (cov.S) {
        auto sc = report::cyc_cells(*cov.S, w);
        row.insert(row.end(), sc.begin(), sc.end());
      }
      out << report::csv_line(row);
    }
  } else {
    out << "q = " << c.q << ", expected rank " << c.expected_rank << ", method " << certify::to_string(c.method)
        << "\n";
    out << "verdict: " << certify::to_string(c.verdict) << "\n";
    out << "lines used: " << c.lines_used() << "\n";
    for (const auto& u : c.lines) {
      out << "  a = " << report::pretty_elem(ctx, u.line.a) << ", b = " << report::pretty_elem(ctx, u.line.b)
          << ", c = " << report::pretty_elem(ctx, u.c) << "\n";
    }
    for (const auto& cov : c.coverage) {
      out << "  " << tuple_text(cov.tuple) << ": ";
      if (cov.tuple.is_trivial()) out << "trivial, 1/d";
      else if (!cov.nonzero) out << "not covered";
      else out << "c = " << report::pretty_elem(ctx, *cov.c) << ", S = " << report::pretty_cyc(*cov.S);
      out << "\n";
    }
  }
  const bool certifiable_class = ctx.q() % 12 == 7 || ctx.q() % 4 == 1;
  return certifiable_class && c.verdict != certify::Verdict::FullRankCertified ? kExitInvariant : kExitOk;
}

int cmd_rank(const Config& cfg, std::ostream& out) {
  const auto ctx = make_field(cfg);
  const std::int64_t rank = certify::expected_rank(ctx.q());
  const std::size_t w_dim = fermat::w_tuples(ctx.d()).size();
  std::string method = "exhaustive";
  if (ctx.q() % 12 == 7) method = "mod3";
  else if (ctx.q() % 4 == 1) method = "orbit_scan";
  if (cfg.format == "json") {
    Json j;
    j["schema"] = report::kSchema;
    j["p"] = ctx.p();
    j["k"] = ctx.k();
    j["q"] = ctx.q();
    j["d"] = ctx.d();
    j["w_dim"] = w_dim;
    j["expected_rank"] = rank;
    j["divisors_of_d"] = certify::divisor_count(ctx.d());
    j["method"] = method;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << report::csv_line({"q", "d", "w_dim", "expected_rank", "divisors_of_d", "method"});
    out << report::csv_line({std::to_string(ctx.q()), std::to_string(ctx.d()), std::to_string(w_dim),
                             std::to_string(rank), std::to_string(certify::divisor_count(ctx.d())), method});
  } else {
    out << "q = " << ctx.q() << ", d = " << ctx.d() << "\n";
    out << "dim W = " << w_dim << "\n";
    out << "expected rank = " << rank << "\n";
    out << "certificate method: " << method << "\n";
  }
  return kExitOk;
}

unsigned env_threads(unsigned fallback) {
  const char* env = std::getenv("FERMATLINES_THREADS");
  if (!env || !*env) return fallback;
  try {
    const long v = std::stol(env);
    if (v < 1) throw PreconditionError("FERMATLINES_THREADS must be positive");
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw PreconditionError(std::string("FERMATLINES_THREADS is not a positive integer: ") + env);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact character sums, Fermat-surface lines and points on y^2 + xy - t^d y = x^3", "fermatlines"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", cfg.p, "prime p >= 5")->required();
  app.add_option("--k", cfg.k, "q = p^k")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--extended", cfg.extended, "allow large fields");
  app.add_option("--threads", cfg.threads, "worker threads (FERMATLINES_THREADS overrides)")
      ->check(CLI::PositiveNumber);

  auto* charsum_cmd = app.add_subcommand("charsum", "evaluate S_{c,t}");
  charsum_cmd->add_option("--c", cfg.c, "c in F_q as an integer or coordinates c0,c1,...");
  charsum_cmd->add_option("--tuple", cfg.tuple, "exponents i0,i1,i2,i3 summing to 0 mod d");
  charsum_cmd->add_flag("--c-notin-Fq", cfg.c_notin_fq, "use the field generator as c (rejected)");

  auto* survey_cmd = app.add_subcommand("survey", "count c with S = 2q for characters of a given order");
  survey_cmd->add_option("--order", cfg.order, "character order, a divisor of d above 2")->required();

  auto* lines_cmd = app.add_subcommand("lines", "inner products of w-type projections of lines");
  auto* point_cmd = app.add_subcommand("point", "the point on E_d from a line");
  for (auto* sub : {lines_cmd, point_cmd}) {
    sub->add_option("--a", cfg.a, "a in F_q");
    sub->add_option("--b", cfg.b, "b outside F_q with a^2 + 1 = b^2");
    sub->add_flag("--thm1", cfg.thm1, "the single-line choice for q = 7 mod 12, a = b^2");
  }
  lines_cmd->add_option("--tuple", cfg.tuple, "a single tuple instead of all w-type tuples");
  point_cmd->add_option("--translate", cfg.translate, "apply t -> g_d^k t");

  auto* certify_cmd = app.add_subcommand("certify", "full-rank certificate");
  auto* rank_cmd = app.add_subcommand("rank", "dimension and expected rank");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "fermatlines: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cfg.threads = env_threads(cfg.threads);
    if (*charsum_cmd) return cmd_charsum(cfg, out);
    if (*survey_cmd) return cmd_survey(cfg, out);
    if (*lines_cmd) return cmd_lines(cfg, out);
    if (*point_cmd) return cmd_point(cfg, out);
    if (*certify_cmd) return cmd_certify(cfg, out);
    if (*rank_cmd) return cmd_rank(cfg, out);
  } catch (const PreconditionError& e) {
    err << "fermatlines: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "fermatlines: invariant failed: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace fermatlines::cli
