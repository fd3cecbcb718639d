#pragma once

#include "hpi/branching.hpp"
#include "hpi/series.hpp"

#include <string>

namespace hpi {

// {"basis":"schur","terms":[{"partition":[2,1],"coeff":3},...]}
std::string to_json(const SchurExpansion& f);
SchurExpansion schur_from_json(const std::string& text);

// {"basis":"schur","degree":6,"terms":[...]}
std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

// {"group":{"pi":[1,1,1],"n":4},"terms":[{"eps":0,"partition":[3,1,1],"coeff":1},...]}
std::string to_json(const FormalCharacter& f);
FormalCharacter character_from_json(const std::string& text);

} // namespace hpi
