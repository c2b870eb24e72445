// Text formats.
//
//   weight   "l1,l2,l3,l4,l5,l6"
//   path     one line of space-separated vertex ids, leftmost factor first;
//            a blank line is the empty path
//   rc       "L <int>" followed by six lines "nu<a>: (len,rig) (len,rig) ..."
//            with rows in canonical order; an empty partition is "nu<a>:"
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "e6kkr/cartan.hpp"
#include "e6kkr/rigged.hpp"
#include "e6kkr/tensor.hpp"

namespace e6kkr {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Weight parse_weight(std::string_view text);

std::string format_path(const Path& path);
Path parse_path(std::string_view text);

std::string format_rc(const RiggedConfiguration& rc);
/// Rows are canonicalized; shape validity is not checked here.
RiggedConfiguration parse_rc(std::string_view text);

std::string read_file(const std::string& filename);

}  // namespace e6kkr
