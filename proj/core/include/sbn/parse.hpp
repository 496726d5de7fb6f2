#pragma once

#include <string>
#include <vector>

#include "sbn/drg.hpp"
#include "sbn/error.hpp"
#include "sbn/token.hpp"

namespace sbn {

// Single left-to-right pass over the token stream. A synset token opens a
// concept in the current box; (edge-label, target) pairs attach to it until
// the next synset or discourse-relation token. `LABEL <k` opens a new box
// linked from the box k positions earlier in introduction order and makes
// it current. Node references are relative concept offsets, resolved after
// the pass (forward references allowed).
Drg parse_sbn(const std::vector<Token>& tokens, const SbnConfig& config = {},
              std::string origin = {});

// tokenize_sbn + parse_sbn.
Drg parse_document(const std::string& text, const SbnConfig& config = {},
                   std::string origin = {});

} // namespace sbn
