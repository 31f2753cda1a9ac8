#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "wedgecrys/dieudonne.hpp"
#include "wedgecrys/error.hpp"
#include "wedgecrys/graded_mult.hpp"
#include "wedgecrys/local_test_ring.hpp"
#include "wedgecrys/matrix.hpp"
#include "wedgecrys/rank.hpp"
#include "wedgecrys/wedge_crystal.hpp"

namespace wedgecrys {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "v1";

using AnyRing = std::variant<IntegerRing, Rationals, ModulusRing, FiniteField, WittRing, LocalTestRing>;
using AnyMatrix = std::variant<Matrix<IntegerRing>, Matrix<Rationals>, Matrix<ModulusRing>, Matrix<FiniteField>,
                               Matrix<WittRing>, Matrix<LocalTestRing>>;

/// Accepts "Z", "Q", "Z/27" or "Z/3^3", "F_9" or "F_3^2", "W(F_9)/81" or
/// "W(F_9)/3^4", and "F_3[t]/(t^2)". Throws BadDescriptor.
AnyRing parse_ring(std::string_view descriptor);
std::string ring_descriptor(const AnyRing& ring);

/// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const json& j);

/// Rationals are written "s/t", integers "n".
std::string format_rational(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

template <CommutativeRing R>
json matrix_to_json(const Matrix<R>& a) {
  json entries = json::array();
  for (const auto& e : a.entries()) entries.push_back(a.ring().format(e));
  return json{{"schema", kSchemaVersion}, {"ring", a.ring().descriptor()}, {"rows", a.rows()},
              {"cols", a.cols()}, {"entries", std::move(entries)}};
}

json matrix_to_json(const AnyMatrix& a);

namespace detail {
void check_schema_tag(const json& j, const char* what);
std::size_t read_size(const json& j, const char* key, const char* what);
}  // namespace detail

/// Reads entries over a known ring; SchemaError names the offending entry,
/// DimensionMismatch flags a wrong entry count.
template <CommutativeRing R>
Matrix<R> matrix_from_json(const json& j, const R& ring) {
  if (!j.is_object()) throw SchemaError("matrix must be a JSON object");
  detail::check_schema_tag(j, "matrix");
  const std::size_t rows = detail::read_size(j, "rows", "matrix");
  const std::size_t cols = detail::read_size(j, "cols", "matrix");
  if (!j.contains("entries") || !j["entries"].is_array()) throw SchemaError("matrix: 'entries' must be an array");
  const auto& arr = j["entries"];
  if (arr.size() != rows * cols)
    throw DimensionMismatch("matrix: " + std::to_string(arr.size()) + " entries for a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " matrix");
  std::vector<typename R::Element> entries;
  entries.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& e = arr[k];
    const std::string where = "entries[" + std::to_string(k) + "] (row " + std::to_string(cols ? k / cols : 0) +
                              ", col " + std::to_string(cols ? k % cols : 0) + ")";
    std::string text;
    if (e.is_string())
      text = e.get<std::string>();
    else if (e.is_number_integer())
      text = e.dump();
    else
      throw SchemaError(where + ": expected a string encoding, got " + e.dump());
    try {
      entries.push_back(ring.parse(text));
    } catch (const Error& ex) {
      throw SchemaError(where + ": cannot parse '" + text + "' over " + ring.descriptor() + ": " + ex.what());
    }
  }
  return Matrix<R>(ring, rows, cols, std::move(entries));
}

/// Dispatches on the "ring" field.
AnyMatrix matrix_from_json(const json& j);

json statuses_to_json(const std::vector<IdealStatus>& statuses);
/// {"rank": n or null, "decidable", "statuses"}.
json rank_to_json(const RankResult& r);

/// [{"mult": k, "slope": "s/t"}, ...] in ascending slope order.
json polygon_to_json(const NewtonPolygon& np);
NewtonPolygon polygon_from_json(const json& j);

/// {"schema", "p", "a", "m", "rank", "shift", "matrix"}; "eff_precision" is
/// added only when it differs from m.
json isocrystal_to_json(const Isocrystal& c);
Isocrystal isocrystal_from_json(const json& j);

/// {"schema", "source", "r", "p", "a", "m", "height", "dim", "slopes", "mu_check"};
/// mu_check is present only when r = h.
json wedge_report_to_json(const WedgeReport& w);

json dieudonne_to_json(const DieudonneModule& d);
DieudonneModule dieudonne_from_json(const json& j);

/// Generator-value table: {"schema", "field", "degrees", "sources", "target",
/// "values": [{"tuple": [...], "value": [poly, ...]}]}, polynomials as
/// [{"exp": [...], "coeff": "c"}] in exponent order.
template <Field K>
json graded_map_to_json(const GradedMultilinearMap<K>& tau);
GradedMultilinearMap<FiniteField> graded_map_from_json_ff(const json& j);
GradedMultilinearMap<Rationals> graded_map_from_json_q(const json& j);

extern template json graded_map_to_json<FiniteField>(const GradedMultilinearMap<FiniteField>&);
extern template json graded_map_to_json<Rationals>(const GradedMultilinearMap<Rationals>&);

}  // namespace wedgecrys
