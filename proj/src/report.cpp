#include "fermatlines/report.hpp"

#include <sstream>

namespace fermatlines::report {

using gf::FieldCtx;
using gf::FqElem;

Json elem_json(const FieldCtx& ctx, FqElem x) {
  Json out = Json::array();
  for (std::uint32_t c : ctx.coeffs(x)) out.push_back(c);
  return out;
}

Json elem_dlog_json(const FieldCtx& ctx, FqElem x) {
  if (x == ctx.zero()) return "0";
  return ctx.dlog(x);
}

Json cyc_json(const cyc::CycElt& v) { return Json(v.canon()); }

Json tuple_json(const charsum::ExponentTuple& t) { return Json(t.i); }

Json poly_json(const FieldCtx& ctx, const efield::Poly& p) {
  Json out = Json::array();
  for (FqElem c : p) out.push_back(elem_json(ctx, c));
  return out;
}

namespace {

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json header(const FieldCtx& ctx) {
  Json j;
  j["schema"] = kSchema;
  j["p"] = ctx.p();
  j["k"] = ctx.k();
  j["q"] = ctx.q();
  return j;
}

Json ratfunc_json(const FieldCtx& ctx, const efield::RatFunc& f) {
  Json j;
  j["num"] = poly_json(ctx, f.num);
  j["den"] = poly_json(ctx, f.den);
  return j;
}

Json c_list(const FieldCtx& ctx, const std::vector<FqElem>& cs) {
  Json out = Json::array();
  for (FqElem c : cs) out.push_back(elem_json(ctx, c));
  return out;
}

}  // namespace

Json sum_record_json(const FieldCtx& ctx, const charsum::SumRecord& r) {
  Json j = header(ctx);
  j["c"] = elem_dlog_json(ctx, r.c);
  j["c_coords"] = elem_json(ctx, r.c);
  j["tuple"] = tuple_json(r.tuple);
  j["value"] = cyc_json(r.value);
  j["as_integer"] = optional_int(r.as_integer);
  j["is_real"] = r.value.is_real();
  return j;
}

Json survey_json(const FieldCtx& ctx, const charsum::Survey& s) {
  Json j = header(ctx);
  j["order"] = s.order;
  j["N"] = s.n_upper;
  j["bound_numerator"] = s.bound_numerator;
  j["within_bound"] = s.within_bound();
  j["hits"] = c_list(ctx, s.hits);
  j["misses"] = c_list(ctx, s.lower_hits);
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json row;
    row["q"] = ctx.q();
    row["c"] = elem_dlog_json(ctx, r.c);
    row["c_coords"] = elem_json(ctx, r.c);
    row["value"] = cyc_json(r.value);
    row["as_integer"] = optional_int(r.as_integer);
    row["hit_upper"] = r.hit_upper;
    row["hit_lower"] = r.hit_lower;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json point_json(const FieldCtx& ctx, const efield::CurvePoint& P) {
  Json j = header(ctx);
  if (!P) {
    j["infinity"] = true;
    return j;
  }
  j["infinity"] = false;
  j["x"] = ratfunc_json(ctx, P->first);
  j["y"] = ratfunc_json(ctx, P->second);
  return j;
}

Json certificate_json(const FieldCtx& ctx, const certify::Certificate& c) {
  Json j = header(ctx);
  j["expected_rank"] = c.expected_rank;
  j["method"] = certify::to_string(c.method);
  j["verdict"] = certify::to_string(c.verdict);
  j["lines_used"] = c.lines_used();
  Json lines = Json::array();
  for (const auto& u : c.lines) {
    Json l;
    l["a"] = elem_json(ctx, u.line.a);
    l["b"] = elem_json(ctx, u.line.b);
    l["c"] = elem_json(ctx, u.c);
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  Json coverage = Json::array();
  for (const auto& cov : c.coverage) {
    Json row;
    row["tuple"] = tuple_json(cov.tuple);
    row["c"] = cov.c ? elem_json(ctx, *cov.c) : Json(nullptr);
    row["S_canon"] = cov.S ? cyc_json(*cov.S) : Json(nullptr);
    row["nonzero"] = cov.nonzero;
    coverage.push_back(std::move(row));
  }
  j["coverage"] = std::move(coverage);
  j["orbits"] = c.orbits;
  return j;
}

Json line_row_json(const FieldCtx& ctx, const LineRow& r) {
  Json j;
  j["q"] = ctx.q();
  Json line;
  line["a"] = elem_json(ctx, r.line.a);
  line["b"] = elem_json(ctx, r.line.b);
  j["line"] = std::move(line);
  j["tuple"] = tuple_json(r.tuple);
  j["S"] = r.S ? cyc_json(*r.S) : Json(nullptr);
  Json ip;
  ip["num"] = cyc_json(r.inner.numerator);
  ip["den"] = r.inner.denominator;
  j["inner_product"] = std::move(ip);
  j["nonzero"] = !r.inner.is_zero();
  return j;
}

std::int64_t signed_rep(std::uint32_t v, std::uint32_t p) {
  const std::int64_t x = v % p;
  return 2 * x > static_cast<std::int64_t>(p) ? x - p : x;
}

namespace {

std::string render_elem(const FieldCtx& ctx, FqElem x, bool signed_digits) {
  const auto cs = ctx.coeffs(x);
  bool prime_field = true;
  for (std::size_t j = 1; j < cs.size(); ++j) prime_field = prime_field && cs[j] == 0;
  const std::uint32_t c0 = cs.empty() ? 0 : cs[0];
  if (prime_field) return std::to_string(signed_digits ? signed_rep(c0, ctx.p()) : c0);
  std::string out = "(";
  bool first = true;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const std::int64_t v = signed_rep(cs[j], ctx.p());
    if (v == 0) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? "w" : "w^" + std::to_string(j));
    std::string mag = std::to_string(v < 0 ? -v : v);
    std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (first) out += (v < 0 ? "-" : "") + term;
    else out += (v < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string pretty_elem(const FieldCtx& ctx, FqElem x) { return render_elem(ctx, x, false); }

std::string pretty_poly(const FieldCtx& ctx, const efield::Poly& p) {
  std::string out;
  for (std::size_t e = p.size(); e-- > 0;) {
    if (p[e] == ctx.zero()) continue;
    std::string coeff = render_elem(ctx, p[e], true);
    bool negative = false;
    if (coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    const std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string pretty_ratfunc(const FieldCtx& ctx, const efield::RatFunc& f) {
  const std::string num = pretty_poly(ctx, f.num);
  if (f.den.size() == 1) return num;
  return "(" + num + ") / (" + pretty_poly(ctx, f.den) + ")";
}

std::string pretty_cyc(const cyc::CycElt& v) {
  if (const auto m = v.as_integer()) return std::to_string(*m);
  const auto c = v.canon();
  std::string out;
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e] == 0) continue;
    const std::int64_t mag = c[e] < 0 ? -c[e] : c[e];
    const std::string mono = e == 0 ? "" : (e == 1 ? "z" : "z^" + std::to_string(e));
    std::string term = mono.empty() ? std::to_string(mag) : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (out.empty()) out = (c[e] < 0 ? "-" : "") + term;
    else out += (c[e] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::ostringstream os;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (j) os << ',';
    os << cells[j];
  }
  os << '\n';
  return os.str();
}

std::vector<std::string> cyc_cells(const cyc::CycElt& v, std::size_t width) {
  std::vector<std::string> out;
  for (std::int64_t c : v.canon()) out.push_back(std::to_string(c));
  out.resize(std::max(width, out.size()), "0");
  return out;
}

std::vector<std::string> coeff_headers(const std::string& prefix, std::size_t width) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < width; ++j) out.push_back(prefix + std::to_string(j));
  return out;
}

}  // namespace fermatlines::report
