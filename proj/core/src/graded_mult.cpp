#include "wedgecrys/graded_mult.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wedgecrys/error.hpp"
#include "wedgecrys/random.hpp"

namespace wedgecrys {

template <Field K>
GradedRing<K>::GradedRing(K field, std::vector<int> degrees) : field_(std::move(field)), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw BadDescriptor("graded ring needs at least one variable");
  for (int d : degrees_)
    if (d <= 0) throw BadDescriptor("variable degrees must be positive");
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::one() const {
  return constant(field_.one());
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::constant(const Coeff& c) const {
  return monomial(Exponent(nvars(), 0), c);
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::monomial(Exponent e, const Coeff& c) const {
  if (e.size() != nvars()) throw DimensionMismatch("exponent length differs from the number of variables");
  Poly out;
  if (!field_.is_zero(c)) out.emplace(std::move(e), c);
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::variable(std::size_t i) const {
  Exponent e(nvars(), 0);
  e.at(i) = 1;
  return monomial(std::move(e), field_.one());
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::add(const Poly& a, const Poly& b) const {
  Poly out = a;
  for (const auto& [e, c] : b) {
    auto it = out.find(e);
    if (it == out.end()) {
      out.emplace(e, c);
      continue;
    }
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) out.erase(it);
  }
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::neg(const Poly& a) const {
  Poly out;
  for (const auto& [e, c] : a) out.emplace(e, field_.neg(c));
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::sub(const Poly& a, const Poly& b) const {
  return add(a, neg(b));
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::mul(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Coeff c = field_.mul(ca, cb);
      auto it = out.find(e);
      if (it == out.end()) {
        if (!field_.is_zero(c)) out.emplace(std::move(e), std::move(c));
        continue;
      }
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::scale(const Poly& a, const Coeff& c) const {
  Poly out;
  if (field_.is_zero(c)) return out;
  for (const auto& [e, x] : a) out.emplace(e, field_.mul(x, c));
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::pow(const Poly& a, unsigned e) const {
  Poly out = one();
  Poly base = a;
  while (e > 0) {
    if (e & 1U) out = mul(out, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return out;
}

template <Field K>
int GradedRing<K>::degree(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
  return d;
}

template <Field K>
bool GradedRing<K>::is_homogeneous(const Poly& a, int d) const {
  return std::all_of(a.begin(), a.end(), [&](const auto& t) { return degree(t.first) == d; });
}

template <Field K>
bool GradedRing<K>::is_polynomial(const Poly& a) const {
  return std::all_of(a.begin(), a.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
  });
}

template <Field K>
std::vector<Exponent> GradedRing<K>::monomials(int d) const {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars()) {
      if (left % degrees_[i] == 0) {
        cur[i] = left / degrees_[i];
        out.push_back(cur);
      }
      return;
    }
    for (int k = 0; k * degrees_[i] <= left; ++k) {
      cur[i] = k;
      self(self, i + 1, left - k * degrees_[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::random_homogeneous(int d, std::mt19937_64& gen) const {
  Poly out;
  for (auto& e : monomials(d)) {
    Coeff c = field_.random(gen);
    if (!field_.is_zero(c)) out.emplace(std::move(e), std::move(c));
  }
  return out;
}

template <Field K>
typename GradedRing<K>::Poly GradedRing<K>::divide_by_monomial(const Poly& a, const Poly& f, unsigned k) const {
  if (!is_monomial(f)) throw UnsupportedRing("division is only by monomials");
  const auto& [fe, fc] = *f.begin();
  Coeff inv = field_.one();
  const Coeff fci = field_.unit_inverse(fc);
  for (unsigned i = 0; i < k; ++i) inv = field_.mul(inv, fci);
  Poly out;
  for (const auto& [e, c] : a) {
    Exponent q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) q[i] = e[i] - static_cast<int>(k) * fe[i];
    out.emplace(std::move(q), field_.mul(c, inv));
  }
  return out;
}

template <Field K>
std::string GradedRing<K>::format(const Poly& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads naturally.
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool unit_coeff = c == field_.one();
    if (!unit_coeff || constant_term) os << field_.format(c);
    bool need_star = !unit_coeff || constant_term;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << 'x' << i;
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

template <Field K>
bool is_homogeneous_element(const GradedRing<K>& ring, const FreeGradedModule& m, const ModuleElement<K>& x, int d) {
  if (x.size() != m.rank()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!ring.is_homogeneous(x[i], d - m.generator_degrees[i])) return false;
  return true;
}

template <Field K>
ModuleElement<K> random_element(const GradedRing<K>& ring, const FreeGradedModule& m, int d, std::mt19937_64& gen) {
  ModuleElement<K> out;
  out.reserve(m.rank());
  for (int g : m.generator_degrees) out.push_back(ring.random_homogeneous(d - g, gen));
  return out;
}

namespace {

template <Field K>
ModuleElement<K> module_add(const GradedRing<K>& ring, const ModuleElement<K>& a, const ModuleElement<K>& b) {
  ModuleElement<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

template <Field K>
ModuleElement<K> module_scale(const GradedRing<K>& ring, const ModuleElement<K>& a,
                              const typename GradedRing<K>::Poly& s) {
  ModuleElement<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(a[i], s);
  return out;
}

int max_degree(const std::vector<FreeGradedModule>& ms) {
  int best = 0;
  for (const auto& m : ms)
    for (int g : m.generator_degrees) best = std::max(best, g);
  return best;
}

}  // namespace

template <Field K>
GradedMultilinearMap<K>::GradedMultilinearMap(GradedRing<K> ring, std::vector<FreeGradedModule> sources,
                                              FreeGradedModule target)
    : ring_(std::move(ring)), sources_(std::move(sources)), target_(std::move(target)) {
  if (sources_.empty()) throw ArityMismatch("a multilinear map needs at least one source");
  std::size_t n = 1;
  for (const auto& s : sources_) {
    if (s.rank() == 0) throw DimensionMismatch("source modules must have positive rank");
    n *= s.rank();
  }
  values_.assign(n, ModuleElement<K>(target_.rank()));
}

template <Field K>
std::size_t GradedMultilinearMap<K>::index(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != sources_.size()) throw ArityMismatch("generator tuple has the wrong length");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] >= sources_[k].rank()) throw DimensionMismatch("generator index out of range");
    idx = idx * sources_[k].rank() + tuple[k];
  }
  return idx;
}

template <Field K>
std::vector<std::size_t> GradedMultilinearMap<K>::tuple(std::size_t index) const {
  std::vector<std::size_t> t(sources_.size());
  for (std::size_t k = sources_.size(); k-- > 0;) {
    t[k] = index % sources_[k].rank();
    index /= sources_[k].rank();
  }
  return t;
}

template <Field K>
int GradedMultilinearMap<K>::degree_sum(const std::vector<std::size_t>& tuple) const {
  int d = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) d += sources_[k].generator_degrees[tuple[k]];
  return d;
}

template <Field K>
void GradedMultilinearMap<K>::set_value(const std::vector<std::size_t>& tuple, ModuleElement<K> v) {
  if (v.size() != target_.rank()) throw DimensionMismatch("value has the wrong rank");
  values_[index(tuple)] = std::move(v);
}

template <Field K>
ModuleElement<K> GradedMultilinearMap<K>::evaluate(const std::vector<ModuleElement<K>>& args) const {
  if (args.size() != sources_.size()) throw ArityMismatch("wrong number of arguments");
  for (std::size_t k = 0; k < args.size(); ++k)
    if (args[k].size() != sources_[k].rank()) throw DimensionMismatch("argument has the wrong rank");
  ModuleElement<K> out(target_.rank());
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    auto t = tuple(idx);
    auto coeff = ring_.one();
    for (std::size_t k = 0; k < t.size() && !coeff.empty(); ++k) coeff = ring_.mul(coeff, args[k][t[k]]);
    if (coeff.empty()) continue;
    out = module_add(ring_, out, module_scale(ring_, values_[idx], coeff));
  }
  return out;
}

template <Field K>
bool GradedMultilinearMap<K>::generators_graded() const {
  for (std::size_t idx = 0; idx < values_.size(); ++idx)
    if (!is_homogeneous_element(ring_, target_, values_[idx], degree_sum(tuple(idx)))) return false;
  return true;
}

template <Field K>
GradedMultilinearMap<K> random_graded_map(const GradedRing<K>& ring, const std::vector<FreeGradedModule>& sources,
                                          const FreeGradedModule& target, std::mt19937_64& gen) {
  GradedMultilinearMap<K> tau(ring, sources, target);
  for (std::size_t idx = 0; idx < tau.size(); ++idx) {
    auto t = tau.tuple(idx);
    tau.set_value(t, random_element(ring, target, tau.degree_sum(t), gen));
  }
  return tau;
}

template <Field K>
bool is_graded_multilinear(const GradedMultilinearMap<K>& tau, std::size_t trials, std::uint64_t seed,
                           int degree_bound) {
  if (!tau.generators_graded()) return false;
  const auto& ring = tau.ring();
  const auto& sources = tau.sources();
  if (degree_bound <= 0) degree_bound = 2 * max_degree(sources) + 4;
  std::uniform_int_distribution<int> deg(0, degree_bound);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto gen = trial_engine(seed, trial);
    std::vector<ModuleElement<K>> args;
    int total = 0;
    for (const auto& m : sources) {
      int d = deg(gen);
      total += d;
      args.push_back(random_element(ring, m, d, gen));
    }
    auto out = tau.evaluate(args);
    if (!is_homogeneous_element(ring, tau.target(), out, total)) return false;

    // Linearity in one slot: tau(.., s x + t y, ..) = s tau(.., x, ..) + t tau(.., y, ..).
    std::size_t slot = std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(gen);
    int d = deg(gen);
    int e = std::uniform_int_distribution<int>(0, 3)(gen);
    auto x = random_element(ring, sources[slot], d, gen);
    auto y = random_element(ring, sources[slot], d, gen);
    auto s = ring.random_homogeneous(e, gen);
    auto t = ring.random_homogeneous(e, gen);
    auto combo_args = args;
    combo_args[slot] = module_add(ring, module_scale(ring, x, s), module_scale(ring, y, t));
    auto lhs = tau.evaluate(combo_args);
    auto x_args = args;
    x_args[slot] = x;
    auto y_args = args;
    y_args[slot] = y;
    auto rhs = module_add(ring, module_scale(ring, tau.evaluate(x_args), s), module_scale(ring, tau.evaluate(y_args), t));
    if (lhs != rhs) return false;
  }
  return true;
}

template <Field K>
ModuleElement<K> StarHomElement<K>::apply(const GradedRing<K>& ring, const ModuleElement<K>& x) const {
  if (x.size() != source.rank()) throw DimensionMismatch("argument has the wrong rank");
  ModuleElement<K> out(target.rank());
  for (std::size_t j = 0; j < target.rank(); ++j)
    for (std::size_t l = 0; l < source.rank(); ++l) out[j] = ring.add(out[j], ring.mul(entry(j, l), x[l]));
  return out;
}

template <Field K>
bool StarHomElement<K>::audit(const GradedRing<K>& ring) const {
  if (grade < 0) return false;
  if (entries.size() != target.rank() * source.rank()) return false;
  for (std::size_t j = 0; j < target.rank(); ++j)
    for (std::size_t l = 0; l < source.rank(); ++l) {
      const auto& e = entry(j, l);
      if (!ring.is_polynomial(e)) return false;
      if (!ring.is_homogeneous(e, source.generator_degrees[l] - target.generator_degrees[j] + grade)) return false;
    }
  return true;
}

template <Field K>
ThetaMap<K> theta(const GradedMultilinearMap<K>& tau) {
  if (!tau.generators_graded()) throw NotGraded("map is not graded on generators");
  std::vector<FreeGradedModule> first(tau.sources().begin(), tau.sources().end() - 1);
  const FreeGradedModule& last = tau.sources().back();
  ThetaMap<K> out{tau.ring(), first, last, tau.target(), {}};
  std::size_t count = tau.size() / last.rank();
  out.values.reserve(count);
  for (std::size_t head = 0; head < count; ++head) {
    StarHomElement<K> phi;
    phi.source = last;
    phi.target = tau.target();
    phi.entries.resize(tau.target().rank() * last.rank());
    for (std::size_t l = 0; l < last.rank(); ++l) {
      auto t = tau.tuple(head * last.rank() + l);
      if (l == 0) phi.grade = tau.degree_sum(t) - last.generator_degrees[0];
      const auto& v = tau.value(t);
      for (std::size_t j = 0; j < tau.target().rank(); ++j) phi.entries[j * last.rank() + l] = v[j];
    }
    out.values.push_back(std::move(phi));
  }
  return out;
}

template <Field K>
GradedMultilinearMap<K> theta_inverse(const ThetaMap<K>& t) {
  auto sources = t.sources;
  sources.push_back(t.last);
  GradedMultilinearMap<K> tau(t.ring, sources, t.target);
  const std::size_t n = t.last.rank();
  if (t.values.size() * n != tau.size()) throw DimensionMismatch("theta table has the wrong size");
  for (std::size_t head = 0; head < t.values.size(); ++head) {
    const auto& phi = t.values[head];
    if (!phi.audit(t.ring)) throw NotGraded("theta value fails the degree audit");
    for (std::size_t l = 0; l < n; ++l) {
      ModuleElement<K> v(t.target.rank());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = phi.entry(j, l);
      tau.set_value(tau.tuple(head * n + l), std::move(v));
    }
  }
  if (!tau.generators_graded()) throw NotGraded("theta grades disagree with generator degrees");
  return tau;
}

template <Field K>
StarHomElement<K> theta_apply(const ThetaMap<K>& t, const std::vector<ModuleElement<K>>& args,
                              const std::vector<int>& degrees) {
  if (args.size() != t.sources.size() || degrees.size() != args.size())
    throw ArityMismatch("theta expects one argument per leading source");
  int grade = 0;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!is_homogeneous_element(t.ring, t.sources[k], args[k], degrees[k]))
      throw GradeMismatch("argument " + std::to_string(k) + " is not homogeneous of degree " +
                          std::to_string(degrees[k]));
    grade += degrees[k];
  }
  const auto& ring = t.ring;
  StarHomElement<K> out;
  out.grade = grade;
  out.source = t.last;
  out.target = t.target;
  out.entries.resize(t.target.rank() * t.last.rank());
  for (std::size_t head = 0; head < t.values.size(); ++head) {
    auto coeff = ring.one();
    std::size_t rest = head;
    for (std::size_t k = args.size(); k-- > 0;) {
      std::size_t gi = rest % t.sources[k].rank();
      rest /= t.sources[k].rank();
      coeff = ring.mul(coeff, args[k][gi]);
    }
    if (coeff.empty()) continue;
    const auto& phi = t.values[head];
    for (std::size_t e = 0; e < out.entries.size(); ++e)
      out.entries[e] = ring.add(out.entries[e], ring.mul(coeff, phi.entries[e]));
  }
  return out;
}

template <Field K>
ModuleElement<K> ChartMap<K>::apply(const GradedRing<K>& ring, const ModuleElement<K>& x) const {
  if (x.size() != source.rank()) throw DimensionMismatch("argument has the wrong rank");
  ModuleElement<K> out(target.rank());
  for (std::size_t j = 0; j < target.rank(); ++j)
    for (std::size_t l = 0; l < source.rank(); ++l)
      out[j] = ring.add(out[j], ring.mul(entries[j * source.rank() + l], x[l]));
  return out;
}

namespace {

template <Field K>
int monomial_degree(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& f) {
  if (!ring.is_monomial(f) || !ring.is_polynomial(f))
    throw UnsupportedRing("localization is only supported at monomials");
  int d = ring.degree(f.begin()->first);
  if (d <= 0) throw UnsupportedRing("localization needs a monomial of positive degree");
  return d;
}

}  // namespace

template <Field K>
ChartMap<K> localize_deg0_map(const GradedRing<K>& ring, const StarHomElement<K>& phi,
                              const typename GradedRing<K>::Poly& f) {
  const int d = monomial_degree(ring, f);
  if (phi.grade % d != 0)
    throw GradeMismatch("grade " + std::to_string(phi.grade) + " is not a multiple of deg f = " + std::to_string(d));
  const auto n = static_cast<unsigned>(phi.grade / d);
  ChartMap<K> out{f, phi.source, phi.target, {}};
  out.entries.reserve(phi.entries.size());
  for (const auto& e : phi.entries) out.entries.push_back(ring.divide_by_monomial(e, f, n));
  return out;
}

template <Field K>
ChartMap<K> restrict_chart(const GradedRing<K>& ring, const ChartMap<K>& c, const typename GradedRing<K>::Poly& g) {
  monomial_degree(ring, g);
  ChartMap<K> out = c;
  out.f = ring.mul(c.f, g);
  return out;
}

template <Field K>
bool restriction_check(const GradedRing<K>& ring, const StarHomElement<K>& phi, const typename GradedRing<K>::Poly& f,
                       const typename GradedRing<K>::Poly& g) {
  const int df = monomial_degree(ring, f);
  const int dg = monomial_degree(ring, g);
  auto first = restrict_chart(ring, localize_deg0_map(ring, phi, f), g);
  const auto n = static_cast<unsigned>(phi.grade / df);
  StarHomElement<K> lifted = phi;
  lifted.grade = phi.grade + static_cast<int>(n) * dg;
  const auto gn = ring.pow(g, n);
  for (auto& e : lifted.entries) e = ring.mul(e, gn);
  auto second = localize_deg0_map(ring, lifted, ring.mul(f, g));
  return first == second;
}

template <Field K>
std::vector<Exponent> chart_generators(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& f,
                                       unsigned max_power) {
  const int d = monomial_degree(ring, f);
  const Exponent& fe = f.begin()->first;
  if (max_power == 0) {
    max_power = 1;
    for (int g : ring.degrees()) max_power *= static_cast<unsigned>(g);
  }
  std::set<Exponent> all;
  for (unsigned k = 1; k <= max_power; ++k)
    for (auto e : ring.monomials(static_cast<int>(k) * d)) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] -= static_cast<int>(k) * fe[i];
      if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) all.insert(std::move(e));
    }
  std::vector<Exponent> out;
  for (const auto& e : all) {
    bool decomposable = false;
    for (const auto& a : all) {
      Exponent b(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) b[i] = e[i] - a[i];
      if (all.count(b) != 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(e);
  }
  return out;
}

template <Field K>
bool in_chart_ring(const GradedRing<K>& ring, const typename GradedRing<K>::Poly& f,
                   const typename GradedRing<K>::Poly& x) {
  monomial_degree(ring, f);
  const Exponent& fe = f.begin()->first;
  for (const auto& [e, c] : x) {
    if (ring.degree(e) != 0) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && fe[i] == 0) return false;
  }
  return true;
}

template <Field K>
ChartMultilinear<K>::ChartMultilinear(GradedMultilinearMap<K> tau, typename GradedRing<K>::Poly f)
    : tau_(std::move(tau)), theta_(theta(tau_)), f_(std::move(f)), f_degree_(monomial_degree(tau_.ring(), f_)) {}

template <Field K>
ModuleElement<K> ChartMultilinear<K>::evaluate_direct(const std::vector<ModuleElement<K>>& xs) const {
  return tau_.evaluate(xs);
}

template <Field K>
ModuleElement<K> ChartMultilinear<K>::evaluate_adjunction(const std::vector<ModuleElement<K>>& xs) const {
  const auto& ring = tau_.ring();
  if (xs.size() != tau_.arity()) throw ArityMismatch("wrong number of chart arguments");
  const Exponent& fe = f_.begin()->first;
  std::vector<ModuleElement<K>> cleared;
  std::vector<int> degrees;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    // Least c with f^c x_k polynomial.
    int c = 0;
    for (const auto& entry : xs[k])
      for (const auto& [e, coeff] : entry)
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] >= 0) continue;
          if (fe[i] == 0) throw GradeMismatch("chart element has a denominator outside f");
          c = std::max(c, (-e[i] + fe[i] - 1) / fe[i]);
        }
    const auto fc = ring.pow(f_, static_cast<unsigned>(c));
    cleared.push_back(module_scale(ring, xs[k], fc));
    degrees.push_back(c * f_degree_);
  }
  auto phi = theta_apply(theta_, cleared, degrees);
  return localize_deg0_map(ring, phi, f_).apply(ring, xs.back());
}

template <Field K>
ModuleElement<K> ChartMultilinear<K>::random_chart_element(const FreeGradedModule& m, std::mt19937_64& gen,
                                                           unsigned max_power) const {
  const auto& ring = tau_.ring();
  const auto c = std::uniform_int_distribution<unsigned>(0, max_power)(gen);
  auto x = random_element(ring, m, static_cast<int>(c) * f_degree_, gen);
  for (auto& e : x) e = ring.divide_by_monomial(e, f_, c);
  return x;
}

template <Field K>
ChartPathReport chart_path_check(const GradedMultilinearMap<K>& tau, const typename GradedRing<K>::Poly& f,
                                 std::size_t trials, std::uint64_t seed) {
  ChartMultilinear<K> chart(tau, f);
  ChartPathReport rep;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto gen = trial_engine(seed, trial);
    std::vector<ModuleElement<K>> xs;
    for (const auto& m : tau.sources()) xs.push_back(chart.random_chart_element(m, gen));
    ++rep.checks;
    if (chart.evaluate_direct(xs) != chart.evaluate_adjunction(xs)) ++rep.failures;
  }
  return rep;
}

#define WEDGECRYS_GRADED_INSTANTIATE(K)                                                                        \
  template class GradedRing<K>;                                                                                \
  template class GradedMultilinearMap<K>;                                                                      \
  template struct StarHomElement<K>;                                                                           \
  template struct ChartMap<K>;                                                                                 \
  template class ChartMultilinear<K>;                                                                          \
  template bool is_homogeneous_element<K>(const GradedRing<K>&, const FreeGradedModule&, const ModuleElement<K>&, \
                                          int);                                                                \
  template ModuleElement<K> random_element<K>(const GradedRing<K>&, const FreeGradedModule&, int,             \
                                              std::mt19937_64&);                                               \
  template GradedMultilinearMap<K> random_graded_map<K>(const GradedRing<K>&, const std::vector<FreeGradedModule>&, \
                                                        const FreeGradedModule&, std::mt19937_64&);            \
  template bool is_graded_multilinear<K>(const GradedMultilinearMap<K>&, std::size_t, std::uint64_t, int);     \
  template ThetaMap<K> theta<K>(const GradedMultilinearMap<K>&);                                               \
  template GradedMultilinearMap<K> theta_inverse<K>(const ThetaMap<K>&);                                       \
  template StarHomElement<K> theta_apply<K>(const ThetaMap<K>&, const std::vector<ModuleElement<K>>&,          \
                                            const std::vector<int>&);                                          \
  template ChartMap<K> localize_deg0_map<K>(const GradedRing<K>&, const StarHomElement<K>&,                    \
                                            const typename GradedRing<K>::Poly&);                              \
  template ChartMap<K> restrict_chart<K>(const GradedRing<K>&, const ChartMap<K>&,                             \
                                         const typename GradedRing<K>::Poly&);                                 \
  template bool restriction_check<K>(const GradedRing<K>&, const StarHomElement<K>&,                           \
                                     const typename GradedRing<K>::Poly&, const typename GradedRing<K>::Poly&); \
  template std::vector<Exponent> chart_generators<K>(const GradedRing<K>&, const typename GradedRing<K>::Poly&,  \
                                                     unsigned);                                                \
  template bool in_chart_ring<K>(const GradedRing<K>&, const typename GradedRing<K>::Poly&,                     \
                                 const typename GradedRing<K>::Poly&);                                         \
  template ChartPathReport chart_path_check<K>(const GradedMultilinearMap<K>&, const typename GradedRing<K>::Poly&, \
                                               std::size_t, std::uint64_t);

WEDGECRYS_GRADED_INSTANTIATE(FiniteField)
WEDGECRYS_GRADED_INSTANTIATE(Rationals)

}  // namespace wedgecrys
