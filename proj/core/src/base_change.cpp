#include "wedgecrys/base_change.hpp"

#include "wedgecrys/detail/unramified_arith.hpp"
#include "wedgecrys/error.hpp"

namespace wedgecrys {

RingHom<ModulusRing, ModulusRing> reduction_hom(const ModulusRing& source, int j) {
  if (j < 1 || j > source.precision())
    throw UnsupportedHom("cannot reduce " + source.descriptor() + " to precision " + std::to_string(j));
  ModulusRing target(source.prime(), j);
  return {source, target, [target](const mpz_class& x) { return target.from_integer(x); },
          source.descriptor() + " -> " + target.descriptor()};
}

RingHom<ModulusRing, FiniteField> residue_hom(const ModulusRing& source) {
  FiniteField target(source.prime(), 1);
  const long p = source.prime();
  return {source, target,
          [target, p](const mpz_class& x) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
            return FiniteField::Element{{r}};
          },
          source.descriptor() + " -> " + target.descriptor()};
}

RingHom<WittRing, WittRing> reduction_hom(const WittRing& source, int j) {
  if (j < 1 || j > source.precision())
    throw UnsupportedHom("cannot reduce " + source.descriptor() + " to precision " + std::to_string(j));
  WittRing target = source.with_precision(j);
  return {source, target,
          [source, j](const WittRing::Element& x) {
            return WittRing::Element{source.truncate(x, j).coeffs};
          },
          source.descriptor() + " -> " + target.descriptor()};
}

RingHom<WittRing, FiniteField> residue_hom(const WittRing& source) {
  return {source, source.residue_field(), [source](const WittRing::Element& x) { return source.reduce(x); },
          source.descriptor() + " -> " + source.residue_field().descriptor()};
}

RingHom<LocalTestRing, FiniteField> residue_hom(const LocalTestRing& source) {
  return {source, source.residue_field(), [source](const LocalTestRing::Element& x) { return source.residue(x); },
          source.descriptor() + " -> " + source.residue_field().descriptor()};
}

RingHom<FiniteField, FiniteField> embedding_hom(const FiniteField& source, const FiniteField& target) {
  if (source.characteristic() != target.characteristic())
    throw UnsupportedHom("no embedding between different characteristics");
  if (source.degree() != 1 && !(source == target))
    throw UnsupportedHom("only embeddings of the prime field are supported");
  return {source, target,
          [target](const FiniteField::Element& x) {
            FiniteField::Element out = target.zero();
            out.coeffs[0] = x.coeffs[0];
            if (x.coeffs.size() > 1) out = x;
            return out;
          },
          source.descriptor() + " -> " + target.descriptor()};
}

RingHom<IntegerRing, Rationals> embedding_hom(const IntegerRing& source) {
  return {source, Rationals{}, [](const mpz_class& x) { return mpq_class(x); }, "Z -> Q"};
}

RingHom<IntegerRing, ModulusRing> reduction_hom(const IntegerRing& source, const ModulusRing& target) {
  return {source, target, [target](const mpz_class& x) { return target.from_integer(x); },
          "Z -> " + target.descriptor()};
}

}  // namespace wedgecrys
