#pragma once

#include "seqdens/sequence.hpp"

#include <string>
#include <vector>

namespace seqdens::fixtures {

// Built-in corpus: example4, s15, q15, multimax2, multimax3, multimax5, smi.
const std::vector<std::string>& names();

// Sequence-file content of a fixture (as `demo` writes it).
std::string file_text(const std::string& name);

// The parsed, normalized fixture. Throws std::out_of_range for unknown names.
PeriodicSequence get(const std::string& name);

}  // namespace seqdens::fixtures
