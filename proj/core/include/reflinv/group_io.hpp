#ifndef REFLINV_GROUP_IO_HPP
#define REFLINV_GROUP_IO_HPP

#include <string>

#include "reflinv/matrix_group.hpp"

namespace reflinv {

// Group definition in JSON:
//   {"name": "D5", "dimension": 2, "cyclotomic_order": 20,
//    "generators": [[["E(5)^1 + E(5)^4", ...], ...], ...]}
// or {"builtin": "dihedral:5"}. Entries use the exact-scalar syntax; plain
// JSON integers are accepted too. Malformed input raises ParseError carrying
// the line and column in `text`.
ReflectionGroup parse_group_json(const std::string &text, std::size_t max_order = kDefaultMaxOrder);
ReflectionGroup load_group_file(const std::string &path, std::size_t max_order = kDefaultMaxOrder);

} // namespace reflinv

#endif
