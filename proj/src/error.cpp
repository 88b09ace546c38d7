#include "invindel/error.hpp"

namespace invindel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DuplicateMarker: return "DuplicateMarker";
    case Errc::MalformedToken: return "MalformedToken";
    case Errc::TooFewCommonMarkers: return "TooFewCommonMarkers";
    case Errc::NotLinear: return "NotLinear";
    case Errc::AnchorNotCommon: return "AnchorNotCommon";
    case Errc::OddRunCountAboveOne: return "OddRunCountAboveOne";
    case Errc::ShortPathOnGoodNode: return "ShortPathOnGoodNode";
    case Errc::OddLeafCount: return "OddLeafCount";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DegenerateTree: return "DegenerateTree";
    case Errc::UnknownComposition: return "UnknownComposition";
    case Errc::NoCaseMatched: return "NoCaseMatched";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace invindel
