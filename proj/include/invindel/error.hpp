#pragma once

#include <stdexcept>
#include <string>

namespace invindel {

enum class Errc {
  EmptyInput,
  DuplicateMarker,
  MalformedToken,
  TooFewCommonMarkers,
  NotLinear,
  AnchorNotCommon,
  OddRunCountAboveOne,
  ShortPathOnGoodNode,
  OddLeafCount,
  PreconditionViolated,
  DegenerateTree,
  UnknownComposition,
  NoCaseMatched,
  BudgetExceeded,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace invindel
