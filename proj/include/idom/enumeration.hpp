#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

enum class Regularity { cubic, subcubic };

struct EnumSpec {
    int order = 0;  // negative means "any order" (ingest filtering only)
    Regularity regularity = Regularity::subcubic;
    bool forbid_c4 = false;
    std::optional<int> min_girth;
    bool connected = false;
    bool override_guard = false;
};

struct GuardExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Re-checks every predicate of the spec against a concrete graph.
bool matches(const EnumSpec& spec, const Graph& g);

// Exactly one representative per isomorphism class satisfying the spec.
// Deterministic order. Guards: cubic order <= 16, subcubic order <= 12,
// overridable via spec.override_guard.
void enumerate(const EnumSpec& spec, const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate(const EnumSpec& spec);

struct IngestStats {
    int lines = 0;
    int parsed = 0;
    int kept = 0;
    std::vector<std::pair<int, std::string>> malformed;  // (line number, message)
};

// Parses a graph6 file and keeps the graphs matching the spec. With strict set,
// the first malformed line is fatal; otherwise malformed lines are recorded
// and skipped.
std::vector<Graph> ingest_graph6(const std::string& path, const EnumSpec& spec, bool strict,
                                 IngestStats* stats = nullptr);

}  // namespace idom
