#include "wedgecrys/serialization.hpp"

#include <cctype>
#include <limits>

namespace wedgecrys {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct PrimePower {
  long p = 0;
  int k = 0;
};

long to_small_prime(const mpz_class& p, std::string_view text) {
  if (!p.fits_slong_p()) throw BadDescriptor("prime too large in '" + std::string(text) + "'");
  return p.get_si();
}

// "27" or "3^3".
PrimePower parse_prime_power(std::string_view text) {
  text = trim(text);
  const auto caret = text.find('^');
  try {
    if (caret != std::string_view::npos) {
      const mpz_class p = detail::parse_integer(text.substr(0, caret));
      const mpz_class k = detail::parse_integer(text.substr(caret + 1));
      if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw BadDescriptor("'" + std::string(text) + "' is not a prime power");
      if (k < 1 || !k.fits_sint_p()) throw BadDescriptor("bad exponent in '" + std::string(text) + "'");
      return {to_small_prime(p, text), static_cast<int>(k.get_si())};
    }
    mpz_class n = detail::parse_integer(text);
    if (n < 2) throw BadDescriptor("'" + std::string(text) + "' is not a prime power");
    mpz_class p = 0;
    for (unsigned long d = 2; d < 1'000'000 && mpz_class(d) * d <= n; ++d)
      if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
        p = d;
        break;
      }
    if (p == 0) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw BadDescriptor("'" + std::string(text) + "' is not a prime power");
      return {to_small_prime(n, text), 1};
    }
    int k = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++k;
    }
    if (n != 1) throw BadDescriptor("'" + std::string(text) + "' is not a prime power");
    return {p.get_si(), k};
  } catch (const ParseError&) {
    throw BadDescriptor("cannot read '" + std::string(text) + "' as a prime power");
  }
}

FiniteField parse_field(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "F_") throw BadDescriptor("expected F_q, got '" + std::string(text) + "'");
  const auto pp = parse_prime_power(text.substr(2));
  return FiniteField(pp.p, pp.k);
}

int read_int(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw SchemaError(std::string(what) + ": missing '" + key + "'");
  const auto& v = j[key];
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + ": '" + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw SchemaError(std::string(what) + ": '" + key + "' out of range");
  return static_cast<int>(x);
}

std::vector<int> read_int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(what + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

AnyRing parse_ring(std::string_view descriptor) {
  const std::string_view d = trim(descriptor);
  if (d == "Z") return IntegerRing{};
  if (d == "Q") return Rationals{};
  if (d.substr(0, 2) == "Z/") {
    const auto pp = parse_prime_power(d.substr(2));
    return ModulusRing(pp.p, pp.k);
  }
  if (d.substr(0, 2) == "W(") {
    const auto close = d.find(")/");
    if (close == std::string_view::npos) throw BadDescriptor("expected W(F_q)/p^m, got '" + std::string(d) + "'");
    const FiniteField k = parse_field(d.substr(2, close - 2));
    const auto pp = parse_prime_power(d.substr(close + 2));
    if (pp.p != k.characteristic())
      throw BadDescriptor("modulus of '" + std::string(d) + "' is not a power of the residue characteristic");
    return WittRing(pp.p, k.degree(), pp.k);
  }
  if (d.substr(0, 2) == "F_") {
    const auto bracket = d.find("[t]/(t^");
    if (bracket == std::string_view::npos) return parse_field(d);
    const FiniteField k = parse_field(d.substr(0, bracket));
    std::string_view tail = d.substr(bracket + 7);
    if (tail.empty() || tail.back() != ')') throw BadDescriptor("expected F_q[t]/(t^e), got '" + std::string(d) + "'");
    tail.remove_suffix(1);
    try {
      const mpz_class e = detail::parse_integer(tail);
      if (e < 1 || !e.fits_sint_p()) throw BadDescriptor("bad nilpotency in '" + std::string(d) + "'");
      return LocalTestRing(k, static_cast<int>(e.get_si()));
    } catch (const ParseError&) {
      throw BadDescriptor("bad nilpotency in '" + std::string(d) + "'");
    }
  }
  throw BadDescriptor("unknown ring descriptor '" + std::string(d) + "'");
}

std::string ring_descriptor(const AnyRing& ring) {
  return std::visit([](const auto& r) { return std::string(r.descriptor()); }, ring);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(std::string_view text) { return Rationals{}.parse(text); }

json matrix_to_json(const AnyMatrix& a) {
  return std::visit([](const auto& m) { return matrix_to_json(m); }, a);
}

namespace detail {

void check_schema_tag(const json& j, const char* what) {
  if (!j.contains("schema")) return;
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != kSchemaVersion)
    throw SchemaError(std::string(what) + ": unsupported schema " + j["schema"].dump());
}

std::size_t read_size(const json& j, const char* key, const char* what) {
  const int v = read_int(j, key, what);
  if (v < 0) throw SchemaError(std::string(what) + ": '" + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("matrix must be a JSON object");
  if (!j.contains("ring") || !j["ring"].is_string()) throw SchemaError("matrix: 'ring' must be a descriptor string");
  AnyRing ring;
  try {
    ring = parse_ring(j["ring"].get<std::string>());
  } catch (const BadDescriptor& e) {
    throw SchemaError(std::string("matrix: ") + e.what());
  } catch (const NonPrime& e) {
    throw SchemaError(std::string("matrix: ") + e.what());
  }
  return std::visit([&](const auto& r) -> AnyMatrix { return matrix_from_json(j, r); }, ring);
}

json statuses_to_json(const std::vector<IdealStatus>& statuses) {
  json out = json::array();
  for (auto s : statuses) out.push_back(std::string(to_string(s)));
  return out;
}

json rank_to_json(const RankResult& r) {
  json out{{"decidable", r.decidable}, {"statuses", statuses_to_json(r.witness)}};
  out["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  return out;
}

json polygon_to_json(const NewtonPolygon& np) {
  json out = json::array();
  for (const auto& s : np.segments) out.push_back({{"mult", s.mult}, {"slope", format_rational(s.slope)}});
  return out;
}

NewtonPolygon polygon_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("polygon must be an array");
  std::vector<mpq_class> slopes;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& seg = j[k];
    const std::string where = "polygon[" + std::to_string(k) + "]";
    if (!seg.is_object() || !seg.contains("slope") || !seg["slope"].is_string())
      throw SchemaError(where + ": expected {\"mult\", \"slope\"}");
    const std::size_t mult = detail::read_size(seg, "mult", where.c_str());
    mpq_class s;
    try {
      s = parse_rational(seg["slope"].get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    slopes.insert(slopes.end(), mult, s);
  }
  return NewtonPolygon::from_slopes(std::move(slopes));
}

json isocrystal_to_json(const Isocrystal& c) {
  const auto& ring = c.ring();
  json out{{"schema", kSchemaVersion},     {"p", ring.prime()},     {"a", ring.degree()},
           {"m", ring.precision()},        {"rank", c.rank()},      {"shift", c.shift()},
           {"matrix", matrix_to_json(c.matrix())}};
  if (c.eff_precision() != ring.precision()) out["eff_precision"] = c.eff_precision();
  return out;
}

namespace {

WittRing witt_from_header(const json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
  detail::check_schema_tag(j, what);
  const int p = read_int(j, "p", what);
  const int a = read_int(j, "a", what);
  const int m = read_int(j, "m", what);
  try {
    return WittRing(p, a, m);
  } catch (const Error& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

WMatrix witt_matrix(const json& j, const char* key, const WittRing& ring, std::size_t rank, const char* what) {
  if (!j.contains(key)) throw SchemaError(std::string(what) + ": missing '" + key + "'");
  const auto& mj = j[key];
  if (mj.is_object() && mj.contains("ring")) {
    if (!mj["ring"].is_string()) throw SchemaError(std::string(what) + ": matrix ring must be a string");
    AnyRing r;
    try {
      r = parse_ring(mj["ring"].get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(std::string(what) + ": " + e.what());
    }
    if (!std::holds_alternative<WittRing>(r) || !(std::get<WittRing>(r) == ring))
      throw SchemaError(std::string(what) + ": matrix ring " + mj["ring"].dump() + " differs from " + ring.descriptor());
  }
  WMatrix m = matrix_from_json(mj, ring);
  if (m.rows() != rank || m.cols() != rank)
    throw DimensionMismatch(std::string(what) + ": matrix is not " + std::to_string(rank) + "x" + std::to_string(rank));
  return m;
}

}  // namespace

Isocrystal isocrystal_from_json(const json& j) {
  const WittRing ring = witt_from_header(j, "isocrystal");
  const std::size_t rank = detail::read_size(j, "rank", "isocrystal");
  const int shift = read_int(j, "shift", "isocrystal");
  int eff = ring.precision();
  if (j.contains("eff_precision")) eff = read_int(j, "eff_precision", "isocrystal");
  if (eff < 1 || eff > ring.precision()) throw SchemaError("isocrystal: eff_precision outside 1..m");
  return Isocrystal(ring, witt_matrix(j, "matrix", ring, rank, "isocrystal"), shift, eff);
}

json wedge_report_to_json(const WedgeReport& w) {
  json out{{"schema", kSchemaVersion}, {"source", w.source.name()}, {"r", w.r},       {"p", w.p},
           {"a", w.a},                 {"m", w.m},                   {"height", w.height}, {"dim", w.dim},
           {"slopes", polygon_to_json(w.slopes)}};
  if (w.mu_check) out["mu_check"] = *w.mu_check;
  return out;
}

json dieudonne_to_json(const DieudonneModule& d) {
  const auto& ring = d.ring();
  return json{{"schema", kSchemaVersion}, {"p", ring.prime()},  {"a", ring.degree()},       {"m", ring.precision()},
              {"rank", d.rank()},         {"mf", matrix_to_json(d.mf())}, {"mv", matrix_to_json(d.mv())}};
}

DieudonneModule dieudonne_from_json(const json& j) {
  const WittRing ring = witt_from_header(j, "dieudonne");
  const std::size_t rank = detail::read_size(j, "rank", "dieudonne");
  return DieudonneModule(ring, witt_matrix(j, "mf", ring, rank, "dieudonne"),
                         witt_matrix(j, "mv", ring, rank, "dieudonne"));
}

namespace {

template <Field K>
json poly_to_json(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"coeff", ring.field().format(c)}, {"exp", e}});
  return out;
}

template <Field K>
typename GradedRing<K>::Poly poly_from_json(const GradedRing<K>& ring, const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": polynomial must be an array of terms");
  typename GradedRing<K>::Poly out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& t = j[k];
    const std::string w = where + "[" + std::to_string(k) + "]";
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") || !t["coeff"].is_string())
      throw SchemaError(w + ": expected {\"coeff\", \"exp\"}");
    auto e = read_int_array(t["exp"], w + ".exp");
    if (e.size() != ring.nvars()) throw DimensionMismatch(w + ": exponent length differs from the variable count");
    typename K::Element c;
    try {
      c = ring.field().parse(t["coeff"].get<std::string>());
    } catch (const Error& ex) {
      throw SchemaError(w + ": " + ex.what());
    }
    out = ring.add(out, ring.monomial(std::move(e), c));
  }
  return out;
}

template <Field K>
GradedMultilinearMap<K> graded_map_from_json(const json& j, const K& field) {
  const std::vector<int> degrees = read_int_array(j.at("degrees"), "graded map degrees");
  GradedRing<K> ring(field, degrees);
  if (!j.contains("sources") || !j["sources"].is_array()) throw SchemaError("graded map: 'sources' must be an array");
  std::vector<FreeGradedModule> sources;
  for (const auto& s : j["sources"]) sources.push_back({read_int_array(s, "graded map source")});
  FreeGradedModule target{read_int_array(j.at("target"), "graded map target")};
  GradedMultilinearMap<K> tau(ring, sources, target);
  if (!j.contains("values") || !j["values"].is_array()) throw SchemaError("graded map: 'values' must be an array");
  for (std::size_t k = 0; k < j["values"].size(); ++k) {
    const auto& v = j["values"][k];
    const std::string where = "values[" + std::to_string(k) + "]";
    if (!v.is_object() || !v.contains("tuple") || !v.contains("value") || !v["value"].is_array())
      throw SchemaError(where + ": expected {\"tuple\", \"value\"}");
    std::vector<std::size_t> t;
    for (int x : read_int_array(v["tuple"], where + ".tuple")) {
      if (x < 0) throw SchemaError(where + ": negative generator index");
      t.push_back(static_cast<std::size_t>(x));
    }
    ModuleElement<K> value;
    for (std::size_t i = 0; i < v["value"].size(); ++i)
      value.push_back(poly_from_json(ring, v["value"][i], where + ".value[" + std::to_string(i) + "]"));
    tau.set_value(t, std::move(value));
  }
  return tau;
}

void check_graded_header(const json& j) {
  if (!j.is_object()) throw SchemaError("graded map must be a JSON object");
  detail::check_schema_tag(j, "graded map");
  if (!j.contains("field") || !j["field"].is_string()) throw SchemaError("graded map: 'field' must be a string");
  for (const char* key : {"degrees", "target"})
    if (!j.contains(key)) throw SchemaError(std::string("graded map: missing '") + key + "'");
}

}  // namespace

template <Field K>
json graded_map_to_json(const GradedMultilinearMap<K>& tau) {
  const auto& ring = tau.ring();
  json sources = json::array();
  for (const auto& s : tau.sources()) sources.push_back(s.generator_degrees);
  json values = json::array();
  for (std::size_t idx = 0; idx < tau.size(); ++idx) {
    json value = json::array();
    for (const auto& p : tau.values()[idx]) value.push_back(poly_to_json(ring, p));
    values.push_back({{"tuple", tau.tuple(idx)}, {"value", std::move(value)}});
  }
  return json{{"schema", kSchemaVersion},
              {"field", ring.field().descriptor()},
              {"degrees", ring.degrees()},
              {"sources", std::move(sources)},
              {"target", tau.target().generator_degrees},
              {"values", std::move(values)}};
}

GradedMultilinearMap<FiniteField> graded_map_from_json_ff(const json& j) {
  check_graded_header(j);
  AnyRing r;
  try {
    r = parse_ring(j["field"].get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(std::string("graded map: ") + e.what());
  }
  if (!std::holds_alternative<FiniteField>(r)) throw SchemaError("graded map: field is not a finite field");
  return graded_map_from_json(j, std::get<FiniteField>(r));
}

GradedMultilinearMap<Rationals> graded_map_from_json_q(const json& j) {
  check_graded_header(j);
  if (j["field"].get<std::string>() != "Q") throw SchemaError("graded map: field is not Q");
  return graded_map_from_json(j, Rationals{});
}

template json graded_map_to_json<FiniteField>(const GradedMultilinearMap<FiniteField>&);
template json graded_map_to_json<Rationals>(const GradedMultilinearMap<Rationals>&);

}  // namespace wedgecrys
