#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hend/compactness.hpp"

namespace hend {

struct InstanceMeta {
    std::uint64_t seed = 0;
    std::string generator;  // name plus RNG algorithm id, empty if handmade
    bool validated = true;  // false when a point cloud skipped validation
};

/// One line of an instance file: a ground set, a single fuzzy set, an
/// unordered family, or a sequence window, together with its space.
struct InstanceRecord {
    enum class Kind { Set, Fuzzy, Family, Sequence };

    Kind kind = Kind::Set;
    SpacePtr space;
    GroundSet set;                       // Kind::Set
    std::vector<StepFuzzySet> members;   // Fuzzy (one entry), Family, Sequence
    std::optional<double> height_tag;    // Family
    std::size_t tail_start = 1;          // Sequence
    InstanceMeta meta;

    static InstanceRecord of_set(SpacePtr space, GroundSet s, InstanceMeta m = {});
    static InstanceRecord of_fuzzy(StepFuzzySet u, InstanceMeta m = {});
    static InstanceRecord of_family(FuzzyFamily fam, InstanceMeta m = {});
    static InstanceRecord of_sequence(FuzzySeqWindow w, InstanceMeta m = {});

    FuzzyFamily as_family() const;
    FuzzySeqWindow as_sequence() const;
};

/// 17 significant digits; "inf"/"-inf" at infinity.
std::string num17(double v);

/// One JSON object, no trailing newline. Real numbers are emitted as
/// strings with 17 significant digits ("inf"/"-inf" at infinity) so the
/// text round-trips bit-exactly and deterministically.
std::string emit_record(const InstanceRecord& rec);

/// Throws std::invalid_argument on malformed input.
InstanceRecord parse_record(const std::string& line);

void write_instances(std::ostream& out, const std::vector<InstanceRecord>& recs);

/// Skips blank lines; error messages carry the 1-based line number.
std::vector<InstanceRecord> read_instances(std::istream& in);

}  // namespace hend
