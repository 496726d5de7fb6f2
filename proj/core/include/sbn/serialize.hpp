#pragma once

#include <string>

#include "sbn/drg.hpp"
#include "sbn/error.hpp"

namespace sbn {

// Emits tokens in original concept/box order, single-space separated.
// For any d from parse_sbn(t), serialize_sbn(d) equals t up to whitespace
// normalization. Throws NotSerializableError when a node reference cannot
// be expressed relative to document order.
std::string serialize_sbn(const Drg& drg);

} // namespace sbn
