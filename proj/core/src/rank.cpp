#include "wedgecrys/rank.hpp"

namespace wedgecrys {

std::string_view to_string(IdealStatus s) {
  switch (s) {
    case IdealStatus::UNIT:
      return "UNIT";
    case IdealStatus::ZERO:
      return "ZERO";
    case IdealStatus::PROPER_NONZERO:
      return "PROPER_NONZERO";
    case IdealStatus::UNDECIDABLE:
      return "UNDECIDABLE";
  }
  return "UNDECIDABLE";
}

RankResult rank_from_statuses(std::vector<IdealStatus> witness) {
  RankResult out;
  for (auto s : witness)
    if (s == IdealStatus::UNDECIDABLE) out.decidable = false;
  for (std::size_t r = 0; r + 1 < witness.size(); ++r)
    if (witness[r] == IdealStatus::UNIT && witness[r + 1] == IdealStatus::ZERO) {
      out.rank = r;
      break;
    }
  out.witness = std::move(witness);
  return out;
}

}  // namespace wedgecrys
