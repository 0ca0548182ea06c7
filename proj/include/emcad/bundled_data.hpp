#pragma once

#include <string_view>

// Documents compiled into the binary from data/ at build time.
namespace emcad::bundled {

std::string_view materials_json();

// family: transformer, induction, synchronous, dc, srm. Empty view when
// the family is unknown.
std::string_view constants_json(std::string_view family);

}  // namespace emcad::bundled
