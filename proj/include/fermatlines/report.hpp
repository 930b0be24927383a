#pragma once

// JSON, CSV and pretty renderings of the library's results. Every JSON
// document carries {"schema": 1}; keys keep insertion order so identical
// inputs give byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"

#include "fermatlines/certify.hpp"
#include "fermatlines/charsum.hpp"
#include "fermatlines/cyc.hpp"
#include "fermatlines/efield.hpp"
#include "fermatlines/fermat.hpp"
#include "fermatlines/gf.hpp"

namespace fermatlines::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

// Coordinate vector mod p, low degree first.
Json elem_json(const gf::FieldCtx& ctx, gf::FqElem x);
// dlog for nonzero x, "0" for zero.
Json elem_dlog_json(const gf::FieldCtx& ctx, gf::FqElem x);
Json cyc_json(const cyc::CycElt& v);
Json tuple_json(const charsum::ExponentTuple& t);
Json poly_json(const gf::FieldCtx& ctx, const efield::Poly& p);

Json sum_record_json(const gf::FieldCtx& ctx, const charsum::SumRecord& r);
Json survey_json(const gf::FieldCtx& ctx, const charsum::Survey& s);
Json point_json(const gf::FieldCtx& ctx, const efield::CurvePoint& P);
Json certificate_json(const gf::FieldCtx& ctx, const certify::Certificate& c);

struct LineRow {
  fermat::Line line;
  charsum::ExponentTuple tuple;
  std::optional<cyc::CycElt> S;  // only for all-nonzero tuples
  fermat::InnerProduct inner;
};
Json line_row_json(const gf::FieldCtx& ctx, const LineRow& r);

// Signed representative of an F_p residue in (-p/2, p/2].
std::int64_t signed_rep(std::uint32_t v, std::uint32_t p);
// Prime-field elements as integers in [0, p), others as (c0 + c1*w + ...)
// with signed coordinates.
std::string pretty_elem(const gf::FieldCtx& ctx, gf::FqElem x);
// Descending powers of t with signed coefficients, e.g. "-2*t^14 + t^9 - 1".
std::string pretty_poly(const gf::FieldCtx& ctx, const efield::Poly& p);
std::string pretty_ratfunc(const gf::FieldCtx& ctx, const efield::RatFunc& f);
std::string pretty_cyc(const cyc::CycElt& v);

// One CSV line from already-rendered cells.
std::string csv_line(const std::vector<std::string>& cells);
// Canon vector as cells, padded with zeros to width.
std::vector<std::string> cyc_cells(const cyc::CycElt& v, std::size_t width);
std::vector<std::string> coeff_headers(const std::string& prefix, std::size_t width);

}  // namespace fermatlines::report
