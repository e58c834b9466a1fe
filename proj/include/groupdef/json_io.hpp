#pragma once

#include <string>

#include "groupdef/coset_enum.hpp"
#include "groupdef/int_linalg.hpp"
#include "groupdef/presentation.hpp"

namespace groupdef {

// {generators: [names], relators: [[[index, sign], ...]], prime?, pedigree?}
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

// Accepts either the text grammar or the JSON schema (sniffs the first
// non-space character).
Presentation read_presentation(const std::string& content);

// {order, product: [[...]], words: [...]}
std::string group_table_to_json(const GroupTable& gt,
                                const std::vector<std::string>& generator_names);

std::string finabgroup_to_json(const FinAbGroup& g);

// Debug form: {rows, cols, entries: [[r, c, "value"], ...]}.
std::string int_matrix_to_json(const IntMatrix& m);

}  // namespace groupdef
